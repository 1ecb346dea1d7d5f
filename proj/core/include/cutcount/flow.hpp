#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cutcount/graph.hpp"

namespace cutcount {

/// A simple S->T path: vertices.size() == edges.size() + 1; edges[i] joins
/// vertices[i] and vertices[i+1].
struct MengerPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

/// A maximum family of pairwise edge-disjoint S->T paths.
struct MengerPaths {
  std::vector<MengerPath> paths;

  std::size_t p() const noexcept { return paths.size(); }
};

/// Unit-capacity max flow on an undirected multigraph, restricted to the
/// vertices marked live. Sources and sinks are joined to an implicit
/// super-source / super-sink, so only real edges ever appear in cuts.
/// Adjacency is scanned in ascending edge id order, which makes every
/// result a pure function of the input.
class UnitFlow {
 public:
  static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  UnitFlow(const MultiGraph& graph, VertexMask live, std::span<const Vertex> sources,
           std::span<const Vertex> targets);
  UnitFlow(const MultiGraph& graph, std::span<const Vertex> sources, std::span<const Vertex> targets);

  /// Pushes one unit along an edge-disjoint path (warm start). The path must
  /// only use live edges that carry no flow yet.
  void push_path(std::span<const Vertex> vertices, std::span<const EdgeId> edges);

  /// Augments along shortest residual paths until none is left or the flow
  /// value reaches `limit`. Returns the flow value.
  std::size_t augment(std::size_t limit = unbounded);

  std::size_t value() const noexcept { return value_; }

  /// Live vertices reachable from the sources in the residual graph.
  VertexMask residual_source_side() const;

  /// Live edges with exactly one endpoint in `side`.
  std::vector<EdgeId> boundary(const VertexMask& side) const;

  /// Decomposes the current flow into simple edge-disjoint paths. Flow
  /// cycles met during the walk are cancelled.
  MengerPaths decompose() const;

  /// Per-edge orientation of use: 0 unused, +1 along (u,v), -1 along (v,u).
  std::span<const std::int8_t> state() const noexcept { return state_; }

 private:
  bool edge_live(EdgeId e) const;
  static std::int8_t direction(const Edge& e, Vertex from) noexcept { return from == e.u ? 1 : -1; }

  const MultiGraph* graph_;
  VertexMask live_;
  VertexMask is_source_;
  VertexMask is_target_;
  std::vector<Vertex> sources_;
  std::vector<std::int8_t> state_;
  std::size_t value_ = 0;
};

MengerPaths max_disjoint_paths(const CutInstance& inst);

std::size_t min_cut_size(const CutInstance& inst);

/// The minimum cut with inclusion-minimal source side. Throws
/// CutError(disconnected) when S and T are already separated.
EdgeCut closest_min_cut(const CutInstance& inst);

/// Minimum (S,T)-cut value with positive integer edge weights.
std::int64_t weighted_min_cut_value(const MultiGraph& graph, std::span<const std::int64_t> weights,
                                    std::span<const Vertex> sources, std::span<const Vertex> targets);

}  // namespace cutcount
