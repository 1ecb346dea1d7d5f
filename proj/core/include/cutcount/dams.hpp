#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutcount/drainage.hpp"
#include "cutcount/flow.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// Bit j set <=> Menger path j.
using PathMask = std::uint64_t;

/// Largest p a DamIndex accepts. The index keeps a table of 2^p entries
/// per level, so this is a memory limit rather than a bitmask limit.
inline constexpr std::size_t max_dam_paths = 20;

/// A nonempty subset of drainage level `level`. Since every level carries
/// exactly one edge per Menger path, the subset is identified by its
/// signature: the mask of Menger paths passing through it.
struct Dam {
  std::size_t level = 0;  // 1-based
  PathMask paths = 0;

  auto operator<=>(const Dam&) const = default;
};

/// G with every Menger path edge turned into an arc along its path;
/// all other edges stay undirected.
struct OrientedGraph {
  std::vector<Vertex> tail;          // per edge: tail if directed, -1 if undirected
  std::vector<std::int32_t> path_of; // per edge: Menger path index, -1 if on none

  bool directed(EdgeId e) const { return tail[static_cast<std::size_t>(e)] >= 0; }
  Vertex head(const MultiGraph& g, EdgeId e) const { return g.edge(e).other(tail[static_cast<std::size_t>(e)]); }
};

/// Throws CutError(path_edge_conflict) if two paths claim the same edge.
OrientedGraph orient(const CutInstance& inst, const MengerPaths& paths);

/// Reachability from `seeds` in the mixed graph: arcs are followed forward
/// only, undirected edges both ways, `removed` edges not at all.
VertexMask mixed_reachable(const MultiGraph& g, const OrientedGraph& gd, std::span<const Vertex> seeds,
                           const EdgeMask& removed);

/// Vertices reachable from S in G_D but no longer once `dam` is removed.
/// Vertices S cannot reach at all are never part of a dry area.
VertexMask dry_area(const CutInstance& inst, const OrientedGraph& gd, std::span<const EdgeId> dam);

/// The sub-instance dried out by a dam.
struct DryInstance {
  std::vector<EdgeId> dam;                // parent ids, sorted
  VertexMask dry_area;                    // A*
  std::vector<Vertex> frontier_sources;   // S*: tails of dam arcs
  std::vector<Vertex> frontier_targets;   // T*: heads of arcs leaving S* u A* toward the outside
  std::vector<Vertex> dried_targets;      // T n A*: targets only reachable through the dam
  VertexMask vertices;                    // V* = S* u A* u T*
  std::vector<EdgeId> edges;              // E*, sorted
  std::optional<SubInstance> instance;    // sources S*, targets T* u dried; absent iff no target

  /// Throws CutError(empty_target) when the dam dries no target at all.
  const SubInstance& require_instance() const;
};

DryInstance dry_instance(const CutInstance& parent, const OrientedGraph& gd, std::span<const EdgeId> dam);

/// Dams of one drainage with the closer-than relation resolved up front.
/// All queries are const and the index is immutable after construction.
class DamIndex {
 public:
  DamIndex(const CutInstance& inst, const MengerPaths& paths, const Drainage& drainage, const OrientedGraph& gd);

  std::size_t p() const noexcept { return p_; }
  std::size_t k() const noexcept { return k_; }
  PathMask full_mask() const noexcept { return full_; }

  /// Edge of level `level` on Menger path `path`.
  EdgeId edge_at(std::size_t level, std::size_t path) const { return edge_at_[level - 1][path]; }
  std::vector<EdgeId> edges_of(const Dam& dam) const;
  /// Throws CutError(internal) if `edges` is empty or spans several levels.
  Dam dam_of(std::span<const EdgeId> edges) const;
  Dam complement(const Dam& dam) const { return {dam.level, full_ & ~dam.paths}; }
  bool is_proper(const Dam& dam) const noexcept { return dam.paths != 0 && dam.paths != full_; }

  VertexMask dry_area(const Dam& dam) const;
  DryInstance dry_instance(const Dam& dam) const;

  /// Signature of E*(dam) n Z_level: the paths whose level edge touches the dry area.
  PathMask level_meet(const Dam& dam, std::size_t level) const;

  /// Evaluated from scratch: h < i, equal signatures, E*(bh) n Z_i = bi.
  bool is_closer(const Dam& bh, const Dam& bi) const;

  /// The unique closest dam of `dam` (possibly itself).
  Dam closest_dam_of(const Dam& dam) const;
  bool is_closest(const Dam& dam) const { return closest_dam_of(dam) == dam; }

  /// Every closest dam that is a proper subset of its level, by level then mask.
  std::vector<Dam> enumerate_closest_dams() const;

  /// Levels i >= closest.level whose restriction to closest.paths has
  /// `closest` as its closest dam (always includes closest.level).
  std::vector<std::size_t> levels_closed_by(const Dam& closest) const;

 private:
  const CutInstance* inst_;
  const OrientedGraph* gd_;
  std::size_t p_ = 0;
  std::size_t k_ = 0;
  PathMask full_ = 0;
  std::vector<std::vector<EdgeId>> edge_at_;
  VertexMask base_reach_;
  // closest_level_[i-1][mask]: level of the closest dam of (i, mask)
  std::vector<std::vector<std::uint32_t>> closest_level_;
};

}  // namespace cutcount
