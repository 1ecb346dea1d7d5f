#include "cutcount/counting.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

CountingTree::CountingTree(const CutInstance& root, CountOptions options) : options_(options) {
  validate_instance(root);
  m_root_ = root.graph.num_edges();
  SubInstance sub;
  sub.instance = root;
  std::vector<Vertex> vmap(root.graph.num_vertices());
  for (std::size_t x = 0; x < vmap.size(); ++x) vmap[x] = static_cast<Vertex>(x);
  std::vector<EdgeId> emap(m_root_);
  for (std::size_t e = 0; e < emap.size(); ++e) emap[e] = static_cast<EdgeId>(e);
  MengerPaths menger = max_disjoint_paths(sub.instance);
  if (menger.p() == 0) throw CutError(Errc::disconnected, "S and T are not connected");
  Drainage drainage = build_drainage(sub.instance, menger, options_.drainage);
  add_node(std::move(sub), std::move(vmap), std::move(emap), 0, std::move(menger), std::move(drainage));
}

std::size_t CountingTree::add_node(SubInstance sub, std::vector<Vertex> vertex_to_root,
                                   std::vector<EdgeId> edge_to_root, std::size_t depth, MengerPaths menger,
                                   Drainage drainage) {
  std::vector<std::int32_t> key;
  if (options_.share_identical_children && depth > 0) {
    key = vertex_to_root;
    key.push_back(-1);
    key.insert(key.end(), edge_to_root.begin(), edge_to_root.end());
    key.push_back(-1);
    for (Vertex s : sub.instance.sources) key.push_back(vertex_to_root[static_cast<std::size_t>(s)]);
    key.push_back(-1);
    for (Vertex t : sub.instance.targets) key.push_back(vertex_to_root[static_cast<std::size_t>(t)]);
    if (const auto it = shared_.find(key); it != shared_.end()) {
      ++memo_hits_;
      return it->second;
    }
  }

  auto node = std::make_unique<RecursionNode>();
  node->instance = std::move(sub.instance);
  node->vertex_to_root = std::move(vertex_to_root);
  node->edge_to_root = std::move(edge_to_root);
  node->depth = depth;
  node->menger = std::move(menger);
  node->p = node->menger.p();
  if (depth == 0) p_root_ = node->p;
  if (depth >= p_root_) {
    throw CutError(Errc::depth_exceeded, "recursion depth " + std::to_string(depth) + " with p=" + std::to_string(p_root_));
  }
  node->drainage = std::move(drainage);
  node->oriented = orient(node->instance, node->menger);
  node->dams = std::make_unique<DamIndex>(node->instance, node->menger, node->drainage, node->oriented);
  node->counts.assign(node->k() + 1, std::nullopt);

  const std::size_t index = nodes_.size();
  nodes_.push_back(std::move(node));
  if (!key.empty()) shared_.emplace(std::move(key), index);
  expand(index);
  return index;
}

void CountingTree::expand(std::size_t i) {
  RecursionNode* node = nodes_[i].get();
  // Children are only ever queried at suffix levels >= 1, so their branches
  // matter only where they close a level above 1.
  const std::size_t floor = node->depth == 0 ? 0 : 1;
  if (node->k() <= floor) return;
  for (const Dam& closest : node->dams->enumerate_closest_dams()) {
    Branch branch;
    branch.closest = closest;
    branch.levels = node->dams->levels_closed_by(closest);
    if (branch.levels.empty() || branch.levels.back() <= floor) continue;
    const Dam other = node->dams->complement(closest);
    DryInstance dry = node->dams->dry_instance(other);
    // With nothing dry the child is just the dam arcs: one level, no count.
    const bool dry_nothing = std::find(dry.dry_area.begin(), dry.dry_area.end(), true) == dry.dry_area.end();
    if (dry.instance && !dry_nothing) {
      const std::size_t expected = static_cast<std::size_t>(std::popcount(other.paths));
      MengerPaths menger = max_disjoint_paths(dry.instance->instance);
      if (menger.p() != expected) {
        throw CutError(Errc::internal, "dry instance of a dam of size " + std::to_string(expected) +
                                           " has a different minimum cut size");
      }
      Drainage drainage = build_drainage(dry.instance->instance, menger, options_.drainage);
      // A single-level child has C_l = 0 for every level it can be asked for.
      if (drainage.k() <= 1) {
        node->branches.push_back(std::move(branch));
        continue;
      }
      std::vector<Vertex> vmap;
      vmap.reserve(dry.instance->vertex_to_parent.size());
      for (Vertex x : dry.instance->vertex_to_parent) vmap.push_back(node->vertex_to_root[static_cast<std::size_t>(x)]);
      std::vector<EdgeId> emap;
      emap.reserve(dry.instance->edge_to_parent.size());
      for (EdgeId e : dry.instance->edge_to_parent) emap.push_back(node->edge_to_root[static_cast<std::size_t>(e)]);
      branch.child = add_node(std::move(*dry.instance), std::move(vmap), std::move(emap), node->depth + 1,
                              std::move(menger), std::move(drainage));
      node = nodes_[i].get();
    }
    node->branches.push_back(std::move(branch));
  }
}

const BigCount& CountingTree::count_suffix(std::size_t i, std::size_t level) {
  static const BigCount zero = 0;
  RecursionNode& node = *nodes_.at(i);
  const std::size_t k = node.k();
  if (level >= k) return zero;
  if (node.counts[level]) return *node.counts[level];

  BigCount total = k - level;
  for (const Branch& b : node.branches) {
    if (!b.child) continue;
    for (std::size_t lv : b.levels) {
      if (lv > level) total += count_suffix(*b.child, lv - b.closest.level + 1);
    }
  }
  node.counts[level] = std::move(total);
  return *node.counts[level];
}

void CountingTree::fill_all() {
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    for (std::size_t level = 0; level <= nodes_[i]->k(); ++level) count_suffix(i, level);
  }
  filled_ = true;
}

const BigCount& CountingTree::count_at(std::size_t i, std::size_t level) const {
  static const BigCount zero = 0;
  const RecursionNode& node = *nodes_.at(i);
  if (level >= node.k()) return zero;
  if (!node.counts[level]) throw CutError(Errc::internal, "suffix count not computed");
  return *node.counts[level];
}

TreeStats CountingTree::stats() const {
  TreeStats st;
  st.instances = nodes_.size();
  st.memo_hits = memo_hits_;
  for (const auto& node : nodes_) st.max_depth = std::max(st.max_depth, node->depth);
  st.bound = BigCount(1) << (p_root_ * p_root_);
  st.bound *= m_root_;
  st.within_bounds = BigCount(st.instances) <= st.bound && st.max_depth + 1 <= p_root_;
  return st;
}

TreeStats instance_budget_check(const CountingTree& tree) {
  TreeStats st = tree.stats();
  if (!st.within_bounds) {
    throw CutError(Errc::internal, "recursion tree has " + std::to_string(st.instances) + " instances at depth " +
                                       std::to_string(st.max_depth) + ", beyond the bound " + st.bound.str());
  }
  return st;
}

CountResult count_min_cuts(const CutInstance& inst, CountOptions options) {
  validate_instance(inst);
  if (min_cut_size(inst) == 0) return {0, 1};
  CountingTree tree(inst, options);
  return {tree.root().p, tree.count_suffix(0, 0)};
}

WeightedExpansion expand_weighted(const MultiGraph& graph, std::span<const std::int64_t> weights,
                                  std::span<const Vertex> sources, std::span<const Vertex> targets) {
  if (weights.size() != graph.num_edges()) {
    throw CutError(Errc::internal, "weight count differs from edge count");
  }
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] <= 0) {
      throw CutError(Errc::non_positive_weight, "edge " + std::to_string(e) + " has weight " + std::to_string(weights[e]));
    }
  }
  {
    const CutInstance check(graph, {sources.begin(), sources.end()}, {targets.begin(), targets.end()});
    validate_instance(check);
  }
  WeightedExpansion ex;
  ex.p = weighted_min_cut_value(graph, weights, sources, targets);
  if (ex.p > static_cast<std::int64_t>(max_dam_paths)) {
    throw CutError(Errc::parameter_too_large, "weighted minimum cut " + std::to_string(ex.p) + " exceeds " +
                                                  std::to_string(max_dam_paths));
  }
  MultiGraph out(graph.num_vertices());
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& ed = graph.edge(static_cast<EdgeId>(e));
    const std::int64_t copies = std::min(weights[e], ex.p + 1);
    for (std::int64_t c = 0; c < copies; ++c) {
      out.add_edge(ed.u, ed.v);
      ex.edge_to_original.push_back(static_cast<EdgeId>(e));
    }
  }
  ex.instance = CutInstance(std::move(out), {sources.begin(), sources.end()}, {targets.begin(), targets.end()});
  return ex;
}

std::vector<EdgeId> to_original_edges(const WeightedExpansion& ex, std::span<const EdgeId> edges) {
  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(ex.edge_to_original.at(static_cast<std::size_t>(e)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cutcount
