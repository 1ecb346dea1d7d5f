#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cutcount/flow.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// Successive minimum closest cuts Z_1..Z_k swept from S toward T.
/// Levels are numbered from 1, as are regions R_1..R_{k+1} and frontiers
/// S_1..S_{k+1}; R_{k+1} is the target side of Z_k.
struct Drainage {
  std::size_t p = 0;
  std::vector<std::vector<EdgeId>> levels;      // levels[i-1] = Z_i, sorted
  std::vector<std::vector<Vertex>> regions;     // regions[i-1] = R_i
  std::vector<std::vector<Vertex>> frontiers;   // frontiers[i-1] = S_i
  std::vector<std::size_t> region_of;           // per vertex: 1..k+1, 0 if in no region
  std::vector<std::size_t> level_of;            // per edge: 1..k, 0 if on no level

  std::size_t k() const noexcept { return levels.size(); }
  const std::vector<EdgeId>& level(std::size_t i) const { return levels.at(i - 1); }
  const std::vector<Vertex>& region(std::size_t i) const { return regions.at(i - 1); }
  const std::vector<Vertex>& frontier(std::size_t i) const { return frontiers.at(i - 1); }

  /// R(Z_i,S) = R_1 u ... u R_i. source_side(0) is empty.
  VertexMask source_side(std::size_t i) const;
};

struct DrainageOptions {
  /// Seed each level's flow with the Menger path suffixes past the previous
  /// level; only one extra augmentation is then needed for the stop test.
  bool warm_start = true;
};

/// Builds the drainage of a connected instance. `paths` must be a maximum
/// family of edge-disjoint paths of `inst` (p = paths.p() >= 1).
/// Throws CutError(disconnected) when p = 0.
Drainage build_drainage(const CutInstance& inst, const MengerPaths& paths, DrainageOptions options = {});

/// Same, computing the paths first.
Drainage build_drainage(const CutInstance& inst, DrainageOptions options = {});

/// R(Z_i,T): vertices reachable from T once Z_i is removed.
VertexMask target_side(const CutInstance& inst, const Drainage& d, std::size_t i);

struct FrontInfo {
  std::size_t front = 0;            // i(X)
  std::vector<EdgeId> front_dam;    // X n Z_{i(X)}, sorted
};

/// Smallest level met by `cut`. Throws CutError(no_front) if none is met,
/// which means `cut` is not a minimum cut.
FrontInfo front_of(std::span<const EdgeId> cut, const Drainage& d);

}  // namespace cutcount
