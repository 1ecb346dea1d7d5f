#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cutcount {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Membership masks indexed by vertex / edge id.
using VertexMask = std::vector<bool>;
using EdgeMask = std::vector<bool>;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with dense ids. Parallel edges keep distinct ids;
/// incidence lists are kept in ascending edge-id order.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n);

  /// Throws CutError(id_out_of_range | self_loop).
  EdgeId add_edge(Vertex u, Vertex v);

  std::size_t num_vertices() const noexcept { return incidence_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(Vertex x) const { return incidence_[static_cast<std::size_t>(x)]; }

  bool contains_vertex(Vertex x) const noexcept {
    return x >= 0 && static_cast<std::size_t>(x) < num_vertices();
  }
  bool contains_edge(EdgeId e) const noexcept {
    return e >= 0 && static_cast<std::size_t>(e) < num_edges();
  }

  bool operator==(const MultiGraph& other) const { return edges_ == other.edges_ && num_vertices() == other.num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A multigraph with disjoint nonempty source and target sets.
/// `sources` and `targets` are kept sorted and duplicate-free.
struct CutInstance {
  MultiGraph graph;
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;

  CutInstance() = default;
  CutInstance(MultiGraph g, std::vector<Vertex> s, std::vector<Vertex> t);
};

/// A cut together with the two sides it induces.
struct EdgeCut {
  std::vector<EdgeId> edges;  // sorted
  VertexMask source_side;     // R(X,S)
  VertexMask target_side;     // R(X,T)
};

/// Throws CutError naming the offending element when S or T is empty,
/// S and T intersect, or an id is out of range.
void validate_instance(const CutInstance& inst);

/// Vertices connected to `seeds` once the edges in `removed` are deleted.
/// `removed` may be empty (nothing removed) or sized to the edge count.
VertexMask reachable(const MultiGraph& graph, std::span<const Vertex> seeds, const EdgeMask& removed);
VertexMask reachable(const MultiGraph& graph, std::span<const Vertex> seeds, std::span<const EdgeId> removed);

bool is_cut(const CutInstance& inst, std::span<const EdgeId> edges);

/// Builds the EdgeCut record (sorted edges plus both sides).
EdgeCut make_cut(const CutInstance& inst, std::span<const EdgeId> edges);

VertexMask mask_of(std::size_t n, std::span<const Vertex> members);
EdgeMask edge_mask_of(std::size_t m, std::span<const EdgeId> members);
std::vector<Vertex> members_of(const VertexMask& mask);

/// A sub-instance cut out of a parent with id maps back to the parent.
struct SubInstance {
  CutInstance instance;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

/// Extracts the subgraph spanned by `edges` over `vertices` (both in parent ids).
/// Local ids follow ascending parent ids, so extraction is order-preserving.
SubInstance extract(const MultiGraph& parent, const VertexMask& vertices, std::span<const EdgeId> edges,
                    std::span<const Vertex> sources, std::span<const Vertex> targets);

}  // namespace cutcount
