#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cutcount/flow.hpp"
#include "cutcount/graph.hpp"

namespace cutcount::testing {

/// s - a - b - t. Edges: 0 = (s,a), 1 = (a,b), 2 = (b,t).
inline CutInstance path3() {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return {std::move(g), {0}, {3}};
}

/// p internally disjoint s-t paths of L edges each. s = 0, t = 1.
/// Edge j*L + i is edge i+1 of branch j, counted from s.
inline CutInstance par(std::size_t p, std::size_t L) {
  MultiGraph g(2 + p * (L - 1));
  Vertex next = 2;
  for (std::size_t j = 0; j < p; ++j) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < L; ++i) {
      const Vertex cur = i + 1 == L ? 1 : next++;
      g.add_edge(prev, cur);
      prev = cur;
    }
  }
  return {std::move(g), {0}, {1}};
}

inline CutInstance diamond() { return par(2, 2); }

/// s and t with no edge between them, plus an unrelated edge.
inline CutInstance disc() {
  MultiGraph g(3);
  g.add_edge(1, 2);
  return {std::move(g), {0}, {1}};
}

struct RandomSpec {
  std::size_t max_n = 10;
  std::size_t max_m = 18;
  std::size_t max_p = 4;
  std::size_t max_terminals = 2;
};

/// A random connected-terminal multigraph with 1 <= p <= spec.max_p.
/// Deterministic in the seed.
inline CutInstance random_instance(std::uint64_t seed, RandomSpec spec = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  while (true) {
    const std::size_t n = pick(2, spec.max_n);
    const std::size_t m = pick(n - 1, spec.max_m);
    MultiGraph g(n);
    for (std::size_t e = 0; e < m; ++e) {
      const auto u = static_cast<Vertex>(pick(0, n - 1));
      auto v = static_cast<Vertex>(pick(0, n - 2));
      if (v >= u) ++v;
      g.add_edge(u, v);
    }
    std::vector<Vertex> order(n);
    for (std::size_t x = 0; x < n; ++x) order[x] = static_cast<Vertex>(x);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t ns = pick(1, std::min(spec.max_terminals, n - 1));
    const std::size_t nt = pick(1, std::min(spec.max_terminals, n - ns));
    std::vector<Vertex> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(ns));
    std::vector<Vertex> t(order.begin() + static_cast<std::ptrdiff_t>(ns),
                          order.begin() + static_cast<std::ptrdiff_t>(ns + nt));
    CutInstance inst(std::move(g), std::move(s), std::move(t));
    const std::size_t p = min_cut_size(inst);
    if (p >= 1 && p <= spec.max_p) return inst;
  }
}

/// Random weighted graph: edges and terminals as above, weights in [1, max_w].
struct WeightedInstance {
  MultiGraph graph;
  std::vector<std::int64_t> weights;
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;
};

inline WeightedInstance random_weighted(std::uint64_t seed, std::size_t max_n = 8, std::size_t max_m = 10,
                                        std::int64_t max_w = 6) {
  std::mt19937_64 rng(seed);
  RandomSpec spec;
  spec.max_n = max_n;
  spec.max_m = max_m;
  spec.max_p = 64;
  spec.max_terminals = 1;
  CutInstance base = random_instance(rng(), spec);
  WeightedInstance w{base.graph, {}, base.sources, base.targets};
  std::uniform_int_distribution<std::int64_t> dist(1, max_w);
  for (std::size_t e = 0; e < w.graph.num_edges(); ++e) w.weights.push_back(dist(rng));
  return w;
}

}  // namespace cutcount::testing
