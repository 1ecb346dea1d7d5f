#include "cutcount/dams.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

OrientedGraph orient(const CutInstance& inst, const MengerPaths& paths) {
  OrientedGraph gd;
  gd.tail.assign(inst.graph.num_edges(), -1);
  gd.path_of.assign(inst.graph.num_edges(), -1);
  for (std::size_t j = 0; j < paths.paths.size(); ++j) {
    const MengerPath& q = paths.paths[j];
    for (std::size_t step = 0; step < q.edges.size(); ++step) {
      const auto e = static_cast<std::size_t>(q.edges[step]);
      if (gd.path_of[e] >= 0) {
        throw CutError(Errc::path_edge_conflict, "edge " + std::to_string(e) + " is on paths " +
                                                     std::to_string(gd.path_of[e]) + " and " + std::to_string(j));
      }
      gd.tail[e] = q.vertices[step];
      gd.path_of[e] = static_cast<std::int32_t>(j);
    }
  }
  return gd;
}

VertexMask mixed_reachable(const MultiGraph& g, const OrientedGraph& gd, std::span<const Vertex> seeds,
                           const EdgeMask& removed) {
  VertexMask seen(g.num_vertices(), false);
  std::vector<Vertex> stack;
  for (Vertex s : seeds) {
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      stack.push_back(s);
    }
  }
  const bool any_removed = !removed.empty();
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const auto ei = static_cast<std::size_t>(e);
      if (any_removed && removed[ei]) continue;
      if (gd.tail[ei] >= 0 && gd.tail[ei] != x) continue;
      const Vertex y = g.edge(e).other(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

namespace {

VertexMask dry_area_given_base(const CutInstance& inst, const OrientedGraph& gd, const VertexMask& base,
                               std::span<const EdgeId> dam) {
  const VertexMask wet = mixed_reachable(inst.graph, gd, inst.sources, edge_mask_of(inst.graph.num_edges(), dam));
  VertexMask dry(base.size(), false);
  for (std::size_t x = 0; x < base.size(); ++x) dry[x] = base[x] && !wet[x];
  return dry;
}

DryInstance dry_instance_given_area(const CutInstance& parent, const OrientedGraph& gd, std::span<const EdgeId> dam,
                                    VertexMask area) {
  const MultiGraph& g = parent.graph;
  const std::size_t n = g.num_vertices();
  DryInstance dry;
  dry.dam.assign(dam.begin(), dam.end());
  std::sort(dry.dam.begin(), dry.dam.end());
  dry.dry_area = std::move(area);
  const VertexMask& a = dry.dry_area;

  const EdgeMask in_dam = edge_mask_of(g.num_edges(), dry.dam);
  VertexMask in_sources(n, false);
  VertexMask in_targets(n, false);
  for (EdgeId e : dry.dam) {
    if (!gd.directed(e)) throw CutError(Errc::internal, "dam edge " + std::to_string(e) + " is not an arc");
    in_sources[static_cast<std::size_t>(gd.tail[static_cast<std::size_t>(e)])] = true;
    const Vertex h = gd.head(g, e);
    if (!a[static_cast<std::size_t>(h)]) in_targets[static_cast<std::size_t>(h)] = true;
  }
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    const Edge& ed = g.edge(static_cast<EdgeId>(ei));
    const bool au = a[static_cast<std::size_t>(ed.u)];
    const bool av = a[static_cast<std::size_t>(ed.v)];
    if (au == av || in_dam[ei]) continue;
    const Vertex outside = au ? ed.v : ed.u;
    in_targets[static_cast<std::size_t>(outside)] = true;
  }
  dry.frontier_sources = members_of(in_sources);
  dry.frontier_targets = members_of(in_targets);
  for (Vertex t : parent.targets) {
    if (a[static_cast<std::size_t>(t)]) dry.dried_targets.push_back(t);
  }

  dry.vertices.assign(n, false);
  for (std::size_t x = 0; x < n; ++x) dry.vertices[x] = a[x] || in_sources[x] || in_targets[x];
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    const Edge& ed = g.edge(static_cast<EdgeId>(ei));
    if (in_dam[ei] || a[static_cast<std::size_t>(ed.u)] || a[static_cast<std::size_t>(ed.v)]) {
      dry.edges.push_back(static_cast<EdgeId>(ei));
    }
  }

  std::vector<Vertex> targets = dry.frontier_targets;
  targets.insert(targets.end(), dry.dried_targets.begin(), dry.dried_targets.end());
  if (!targets.empty()) {
    dry.instance = extract(g, dry.vertices, dry.edges, dry.frontier_sources, targets);
    validate_instance(dry.instance->instance);
  }
  return dry;
}

}  // namespace

const SubInstance& DryInstance::require_instance() const {
  if (!instance) throw CutError(Errc::empty_target, "dam dries no target vertex");
  return *instance;
}

VertexMask dry_area(const CutInstance& inst, const OrientedGraph& gd, std::span<const EdgeId> dam) {
  const VertexMask base = mixed_reachable(inst.graph, gd, inst.sources, {});
  return dry_area_given_base(inst, gd, base, dam);
}

DryInstance dry_instance(const CutInstance& parent, const OrientedGraph& gd, std::span<const EdgeId> dam) {
  return dry_instance_given_area(parent, gd, dam, dry_area(parent, gd, dam));
}

DamIndex::DamIndex(const CutInstance& inst, const MengerPaths& paths, const Drainage& drainage,
                   const OrientedGraph& gd)
    : inst_(&inst), gd_(&gd), p_(paths.p()), k_(drainage.k()) {
  if (p_ == 0) throw CutError(Errc::disconnected, "dams need p >= 1");
  if (p_ > max_dam_paths) {
    throw CutError(Errc::parameter_too_large, "p=" + std::to_string(p_) + " exceeds " + std::to_string(max_dam_paths));
  }
  full_ = (PathMask{1} << p_) - 1;

  edge_at_.assign(k_, std::vector<EdgeId>(p_, -1));
  for (std::size_t i = 1; i <= k_; ++i) {
    for (EdgeId e : drainage.level(i)) {
      const std::int32_t j = gd.path_of[static_cast<std::size_t>(e)];
      if (j < 0) throw CutError(Errc::internal, "drainage edge " + std::to_string(e) + " is on no Menger path");
      if (edge_at_[i - 1][static_cast<std::size_t>(j)] >= 0) {
        throw CutError(Errc::internal, "Menger path " + std::to_string(j) + " meets level " + std::to_string(i) + " twice");
      }
      edge_at_[i - 1][static_cast<std::size_t>(j)] = e;
    }
  }
  base_reach_ = mixed_reachable(inst.graph, gd, inst.sources, {});

  // The first (smallest) level h whose restriction to a signature is closer
  // than level i is the closest dam of (i, mask).
  closest_level_.assign(k_, std::vector<std::uint32_t>(full_ + 1, 0));
  for (std::size_t h = 1; h < k_; ++h) {
    for (PathMask mask = 1; mask <= full_; ++mask) {
      bool pending = false;
      for (std::size_t i = h + 1; i <= k_ && !pending; ++i) pending = closest_level_[i - 1][mask] == 0;
      if (!pending) continue;
      const VertexMask area = dry_area({h, mask});
      for (std::size_t i = h + 1; i <= k_; ++i) {
        if (closest_level_[i - 1][mask] != 0) continue;
        PathMask meet = 0;
        for (std::size_t j = 0; j < p_; ++j) {
          const Edge& ed = inst.graph.edge(edge_at_[i - 1][j]);
          if (area[static_cast<std::size_t>(ed.u)] || area[static_cast<std::size_t>(ed.v)]) meet |= PathMask{1} << j;
        }
        if (meet == mask) closest_level_[i - 1][mask] = static_cast<std::uint32_t>(h);
      }
    }
  }
  for (std::size_t i = 1; i <= k_; ++i) {
    for (PathMask mask = 1; mask <= full_; ++mask) {
      if (closest_level_[i - 1][mask] == 0) closest_level_[i - 1][mask] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<EdgeId> DamIndex::edges_of(const Dam& dam) const {
  std::vector<EdgeId> out;
  for (std::size_t j = 0; j < p_; ++j) {
    if (dam.paths >> j & 1U) out.push_back(edge_at(dam.level, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dam DamIndex::dam_of(std::span<const EdgeId> edges) const {
  if (edges.empty()) throw CutError(Errc::internal, "a dam is nonempty");
  Dam dam;
  for (EdgeId e : edges) {
    const std::int32_t j = gd_->path_of.at(static_cast<std::size_t>(e));
    std::size_t level = 0;
    if (j >= 0) {
      for (std::size_t i = 1; i <= k_; ++i) {
        if (edge_at(i, static_cast<std::size_t>(j)) == e) level = i;
      }
    }
    if (level == 0 || (dam.level != 0 && dam.level != level)) {
      throw CutError(Errc::internal, "edge " + std::to_string(e) + " does not fit a single drainage level");
    }
    dam.level = level;
    dam.paths |= PathMask{1} << j;
  }
  return dam;
}

VertexMask DamIndex::dry_area(const Dam& dam) const {
  return dry_area_given_base(*inst_, *gd_, base_reach_, edges_of(dam));
}

DryInstance DamIndex::dry_instance(const Dam& dam) const {
  const std::vector<EdgeId> edges = edges_of(dam);
  return dry_instance_given_area(*inst_, *gd_, edges, dry_area_given_base(*inst_, *gd_, base_reach_, edges));
}

PathMask DamIndex::level_meet(const Dam& dam, std::size_t level) const {
  if (level == dam.level) return dam.paths;
  const VertexMask area = dry_area(dam);
  PathMask meet = 0;
  for (std::size_t j = 0; j < p_; ++j) {
    const Edge& ed = inst_->graph.edge(edge_at(level, j));
    if (area[static_cast<std::size_t>(ed.u)] || area[static_cast<std::size_t>(ed.v)]) meet |= PathMask{1} << j;
  }
  return meet;
}

bool DamIndex::is_closer(const Dam& bh, const Dam& bi) const {
  return bh.level < bi.level && bh.paths == bi.paths && level_meet(bh, bi.level) == bi.paths;
}

Dam DamIndex::closest_dam_of(const Dam& dam) const {
  if (dam.level < 1 || dam.level > k_ || dam.paths == 0 || dam.paths > full_) {
    throw CutError(Errc::id_out_of_range, "not a dam of this drainage");
  }
  return {closest_level_[dam.level - 1][dam.paths], dam.paths};
}

std::vector<Dam> DamIndex::enumerate_closest_dams() const {
  std::vector<Dam> out;
  for (std::size_t h = 1; h <= k_; ++h) {
    for (PathMask mask = 1; mask < full_; ++mask) {
      if (closest_level_[h - 1][mask] == h) out.push_back({h, mask});
    }
  }
  return out;
}

std::vector<std::size_t> DamIndex::levels_closed_by(const Dam& closest) const {
  std::vector<std::size_t> out;
  for (std::size_t i = closest.level; i <= k_; ++i) {
    if (closest_level_[i - 1][closest.paths] == closest.level) out.push_back(i);
  }
  return out;
}

}  // namespace cutcount
