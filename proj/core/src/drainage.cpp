#include "cutcount/drainage.hpp"

#include <algorithm>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

VertexMask Drainage::source_side(std::size_t i) const {
  VertexMask side(region_of.size(), false);
  for (std::size_t x = 0; x < region_of.size(); ++x) {
    side[x] = region_of[x] >= 1 && region_of[x] <= i && region_of[x] <= k();
  }
  return side;
}

namespace {

Drainage build(const CutInstance& inst, const MengerPaths* paths, std::size_t p, DrainageOptions options) {
  if (p == 0) throw CutError(Errc::disconnected, "drainage needs p >= 1");
  const MultiGraph& g = inst.graph;
  const std::size_t n = g.num_vertices();

  Drainage d;
  d.p = p;
  d.region_of.assign(n, 0);
  d.level_of.assign(g.num_edges(), 0);

  const VertexMask is_target = mask_of(n, inst.targets);
  VertexMask live(n, true);
  std::vector<Vertex> frontier = inst.sources;

  while (true) {
    d.frontiers.push_back(frontier);
    if (std::any_of(frontier.begin(), frontier.end(), [&](Vertex x) { return is_target[static_cast<std::size_t>(x)]; })) {
      break;  // a Z edge lands on T: nothing left to cut behind it
    }
    UnitFlow flow(g, live, frontier, inst.targets);
    if (options.warm_start && paths != nullptr) {
      const std::size_t prev = d.k();
      for (const MengerPath& q : paths->paths) {
        std::size_t start = 0;
        if (prev > 0) {
          const auto it = std::find_if(q.edges.begin(), q.edges.end(),
                                       [&](EdgeId e) { return d.level_of[static_cast<std::size_t>(e)] == prev; });
          if (it == q.edges.end()) throw CutError(Errc::internal, "Menger path misses a drainage level");
          start = static_cast<std::size_t>(it - q.edges.begin()) + 1;
        }
        flow.push_path(std::span(q.vertices).subspan(start), std::span(q.edges).subspan(start));
      }
    }
    const std::size_t value = flow.augment(p + 1);
    if (value > p) break;
    if (value < p) throw CutError(Errc::internal, "peeled instance has a cut smaller than p");

    const VertexMask side = flow.residual_source_side();
    std::vector<EdgeId> level = flow.boundary(side);
    if (level.size() != p) throw CutError(Errc::internal, "drainage level of wrong size");

    const std::size_t index = d.k() + 1;
    std::vector<Vertex> region;
    for (std::size_t x = 0; x < n; ++x) {
      if (side[x] && live[x]) {
        region.push_back(static_cast<Vertex>(x));
        d.region_of[x] = index;
        live[x] = false;
      }
    }
    std::vector<Vertex> next;
    for (EdgeId e : level) {
      d.level_of[static_cast<std::size_t>(e)] = index;
      const Edge& ed = g.edge(e);
      next.push_back(side[static_cast<std::size_t>(ed.u)] ? ed.v : ed.u);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    d.levels.push_back(std::move(level));
    d.regions.push_back(std::move(region));
    frontier = std::move(next);
  }
  if (d.k() == 0) throw CutError(Errc::internal, "no drainage level found");

  // R_{k+1} = R(Z_k, T)
  const VertexMask tail_side = reachable(g, inst.targets, d.levels.back());
  std::vector<Vertex> last;
  for (std::size_t x = 0; x < n; ++x) {
    if (tail_side[x]) {
      if (d.region_of[x] != 0) throw CutError(Errc::internal, "target side overlaps a drainage region");
      d.region_of[x] = d.k() + 1;
      last.push_back(static_cast<Vertex>(x));
    }
  }
  d.regions.push_back(std::move(last));
  return d;
}

}  // namespace

Drainage build_drainage(const CutInstance& inst, const MengerPaths& paths, DrainageOptions options) {
  return build(inst, &paths, paths.p(), options);
}

Drainage build_drainage(const CutInstance& inst, DrainageOptions options) {
  const MengerPaths paths = max_disjoint_paths(inst);
  return build(inst, &paths, paths.p(), options);
}

VertexMask target_side(const CutInstance& inst, const Drainage& d, std::size_t i) {
  return reachable(inst.graph, inst.targets, d.level(i));
}

FrontInfo front_of(std::span<const EdgeId> cut, const Drainage& d) {
  FrontInfo info;
  for (EdgeId e : cut) {
    const std::size_t lvl = d.level_of.at(static_cast<std::size_t>(e));
    if (lvl != 0 && (info.front == 0 || lvl < info.front)) info.front = lvl;
  }
  if (info.front == 0) throw CutError(Errc::no_front, "edge set meets no drainage level");
  for (EdgeId e : cut) {
    if (d.level_of[static_cast<std::size_t>(e)] == info.front) info.front_dam.push_back(e);
  }
  std::sort(info.front_dam.begin(), info.front_dam.end());
  return info;
}

}  // namespace cutcount
