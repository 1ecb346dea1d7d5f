#include "cutcount/sampling.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

namespace {

void append_level(const RecursionNode& node, std::size_t level, PathMask paths, std::vector<EdgeId>& out) {
  for (std::size_t j = 0; j < node.p; ++j) {
    if (paths >> j & 1U) {
      out.push_back(node.edge_to_root[static_cast<std::size_t>(node.dams->edge_at(level, j))]);
    }
  }
}

}  // namespace

SamplerState::SamplerState(const CountingTree& tree, std::uint64_t seed) : tree_(&tree), rng_(seed) {
  if (!tree.filled()) throw CutError(Errc::internal, "sampler needs a filled counting tree");
}

BigCount SamplerState::uniform_below(const BigCount& bound) {
  if (bound <= 0) throw CutError(Errc::no_cuts, "empty range");
  if (bound == 1) return 0;
  const BigCount top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  while (true) {
    BigCount r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng_();
      if (w == 0 && spare > 0) word >>= spare;
      r <<= 64;
      r |= word;
    }
    if (r < bound) return r;
  }
}

std::vector<EdgeId> SamplerState::sample() { return unrank_min_cut(*tree_, uniform_below(tree_->count_at(0, 0))); }

std::vector<EdgeId> unrank_min_cut(const CountingTree& tree, BigCount r) {
  if (r < 0 || r >= tree.count_at(0, 0)) throw CutError(Errc::id_out_of_range, "rank outside [0, C_0)");
  std::vector<EdgeId> out;
  std::size_t at = 0;
  std::size_t level = 0;
  while (true) {
    const RecursionNode& node = tree.node(at);
    const std::size_t k = node.k();
    if (r < k - level) {
      append_level(node, level + 1 + static_cast<std::size_t>(r), node.dams->full_mask(), out);
      break;
    }
    r -= k - level;
    bool descended = false;
    for (const Branch& b : node.branches) {
      if (!b.child) continue;
      for (std::size_t lv : b.levels) {
        if (lv <= level) continue;
        const std::size_t child_level = lv - b.closest.level + 1;
        const BigCount& w = tree.count_at(*b.child, child_level);
        if (r < w) {
          append_level(node, lv, b.closest.paths, out);
          at = *b.child;
          level = child_level;
          descended = true;
          break;
        }
        r -= w;
      }
      if (descended) break;
    }
    if (!descended) throw CutError(Errc::probability_leak, "branch weights fall short of the suffix count");
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeCut sample_min_cut(const CutInstance& inst, SamplerState& st) { return make_cut(inst, st.sample()); }

std::vector<std::vector<EdgeId>> sample_many(SamplerState& st, std::size_t count) {
  std::vector<std::vector<EdgeId>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(st.sample());
  return out;
}

std::map<std::vector<EdgeId>, Rational> descent_distribution(const CountingTree& tree) {
  std::map<std::vector<EdgeId>, Rational> dist;
  std::vector<EdgeId> prefix;
  std::function<void(std::size_t, std::size_t, const Rational&)> walk = [&](std::size_t at, std::size_t level,
                                                                            const Rational& reach) {
    const RecursionNode& node = tree.node(at);
    const BigCount& total = tree.count_at(at, level);
    const std::size_t k = node.k();
    BigCount spent = k - level;
    for (std::size_t i = level + 1; i <= k; ++i) {
      std::vector<EdgeId> cut = prefix;
      append_level(node, i, node.dams->full_mask(), cut);
      std::sort(cut.begin(), cut.end());
      dist[cut] += reach * Rational(1, total);
    }
    for (const Branch& b : node.branches) {
      if (!b.child) continue;
      for (std::size_t lv : b.levels) {
        if (lv <= level) continue;
        const std::size_t child_level = lv - b.closest.level + 1;
        const BigCount& w = tree.count_at(*b.child, child_level);
        if (w == 0) continue;
        spent += w;
        const std::size_t mark = prefix.size();
        append_level(node, lv, b.closest.paths, prefix);
        walk(*b.child, child_level, reach * Rational(w, total));
        prefix.resize(mark);
      }
    }
    if (spent != total) throw CutError(Errc::probability_leak, "branch weights " + spent.str() + " vs count " + total.str());
  };
  if (tree.count_at(0, 0) == 0) throw CutError(Errc::no_cuts, "instance has no minimum cut");
  walk(0, 0, Rational(1));
  return dist;
}

std::vector<std::vector<EdgeId>> sample_min_cuts(const CutInstance& inst, std::size_t count, std::uint64_t seed,
                                                 CountOptions options) {
  validate_instance(inst);
  if (min_cut_size(inst) == 0) return std::vector<std::vector<EdgeId>>(count);
  CountingTree tree(inst, options);
  tree.fill_all();
  SamplerState st(tree, seed);
  return sample_many(st, count);
}

}  // namespace cutcount
