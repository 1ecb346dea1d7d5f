#include "cutcount/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "cutcount/errors.hpp"
#include "cutcount/flow.hpp"

namespace cutcount {

namespace {

std::string list(std::span<const EdgeId> edges) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << edges[i];
  os << '}';
  return os.str();
}

std::string name(const Dam& d) {
  std::ostringstream os;
  os << "(level " << d.level << ", paths 0x" << std::hex << d.paths << ')';
  return os.str();
}

BigCount binomial(std::size_t m, std::size_t s) {
  BigCount c = 1;
  for (std::size_t j = 0; j < s; ++j) {
    c *= m - j;
    c /= j + 1;
  }
  return c;
}

// Calls visit(subset) for every s-subset of {0..m-1} in colex order.
template <class Visit>
void for_each_subset(std::size_t m, std::size_t s, Visit visit) {
  if (s > m) return;
  std::vector<EdgeId> c(s);
  for (std::size_t j = 0; j < s; ++j) c[j] = static_cast<EdgeId>(j);
  while (true) {
    visit(std::span<const EdgeId>(c));
    std::size_t j = 0;
    while (j < s && static_cast<std::size_t>(c[j]) + 1 == (j + 1 < s ? static_cast<std::size_t>(c[j + 1]) : m)) ++j;
    if (j == s) return;
    ++c[j];
    for (std::size_t r = 0; r < j; ++r) c[r] = static_cast<EdgeId>(r);
  }
}

// Runs the search and hands every minimum cut to `found`; returns p.
template <class Found>
std::size_t search(const CutInstance& inst, const OracleOptions& options, Found found) {
  validate_instance(inst);
  const std::size_t m = inst.graph.num_edges();
  BigCount examined = 0;
  for (std::size_t s = 0; s <= m; ++s) {
    examined += binomial(m, s);
    if (examined > options.budget) {
      throw CutError(Errc::budget_exceeded, "more than " + std::to_string(options.budget) + " subsets needed");
    }
    bool any = false;
    for_each_subset(m, s, [&](std::span<const EdgeId> subset) {
      if (is_cut(inst, subset)) {
        any = true;
        found(subset);
      }
    });
    if (any) return s;
  }
  throw CutError(Errc::internal, "removing every edge failed to separate S from T");
}

}  // namespace

CountResult brute_force_count(const CutInstance& inst, OracleOptions options) {
  CountResult result;
  result.p = search(inst, options, [&](std::span<const EdgeId>) { ++result.count; });
  return result;
}

OracleReport brute_force_enumerate(const CutInstance& inst, OracleOptions options) {
  OracleReport report;
  report.p = search(inst, options, [&](std::span<const EdgeId> subset) { report.cuts.push_back(make_cut(inst, subset)); });
  return report;
}

std::vector<std::string> drainage_violations(const CutInstance& inst, const Drainage& d) {
  std::vector<std::string> out;
  const std::size_t n = inst.graph.num_vertices();
  if (d.k() >= n) out.push_back("k=" + std::to_string(d.k()) + " is not below n=" + std::to_string(n));
  EdgeMask used(inst.graph.num_edges(), false);
  VertexMask previous(n, false);
  for (std::size_t i = 1; i <= d.k(); ++i) {
    const auto& z = d.level(i);
    if (z.size() != d.p) out.push_back("level " + std::to_string(i) + " has size " + std::to_string(z.size()));
    if (!is_cut(inst, z)) out.push_back("level " + std::to_string(i) + " " + list(z) + " is not a cut");
    for (EdgeId e : z) {
      if (used[static_cast<std::size_t>(e)]) out.push_back("edge " + std::to_string(e) + " lies on two levels");
      used[static_cast<std::size_t>(e)] = true;
    }
    const VertexMask side = reachable(inst.graph, inst.sources, z);
    bool grows = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (previous[x] && !side[x]) out.push_back("source side of level " + std::to_string(i) + " loses vertex " + std::to_string(x));
      grows = grows || (side[x] && !previous[x]);
    }
    if (!grows) out.push_back("source side of level " + std::to_string(i) + " does not grow");
    if (side != d.source_side(i)) out.push_back("regions 1.." + std::to_string(i) + " differ from R(Z_i,S)");
    previous = side;
  }
  return out;
}

namespace {

struct Context {
  const CutInstance& inst;
  MengerPaths menger;
  Drainage drainage;
  OrientedGraph gd;
  std::optional<DamIndex> dams;

  explicit Context(const CutInstance& i) : inst(i), menger(max_disjoint_paths(i)) {
    drainage = build_drainage(inst, menger);
    gd = orient(inst, menger);
    dams.emplace(inst, menger, drainage, gd);
  }
};

struct ChildView {
  std::optional<SubInstance> sub;
  std::optional<Drainage> drainage;
  std::vector<EdgeId> parent_to_child;  // -1 where absent
  std::optional<OracleReport> oracle;
};

ChildView make_child(const Context& ctx, const Dam& complement, const OracleOptions& options) {
  ChildView view;
  DryInstance dry = ctx.dams->dry_instance(complement);
  if (!dry.instance) return view;
  view.sub = std::move(*dry.instance);
  view.drainage = build_drainage(view.sub->instance);
  view.parent_to_child.assign(ctx.inst.graph.num_edges(), -1);
  for (std::size_t e = 0; e < view.sub->edge_to_parent.size(); ++e) {
    view.parent_to_child[static_cast<std::size_t>(view.sub->edge_to_parent[e])] = static_cast<EdgeId>(e);
  }
  view.oracle = brute_force_enumerate(view.sub->instance, options);
  return view;
}

bool inside(const MultiGraph& g, const VertexMask& side, std::span<const EdgeId> edges) {
  return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return side[static_cast<std::size_t>(ed.u)] && side[static_cast<std::size_t>(ed.v)];
  });
}

void audit_instance(const CutInstance& inst, const AuditOptions& options, const std::string& where, bool record,
                    AuditReport& report) {
  ++report.instances_checked;
  const OracleReport oracle = brute_force_enumerate(inst, options.oracle);
  if (record) report.p = oracle.p;
  if (oracle.p == 0) return;
  auto fail = [&](const std::string& what) { report.violations.push_back(where + ": " + what); };

  const Context ctx(inst);
  if (ctx.menger.p() != oracle.p) {
    fail("flow gives p=" + std::to_string(ctx.menger.p()) + ", oracle " + std::to_string(oracle.p));
    return;
  }
  for (const std::string& v : drainage_violations(inst, ctx.drainage)) fail(v);
  const DamIndex& idx = *ctx.dams;
  const std::size_t p = oracle.p;

  std::map<Dam, ChildView> children;
  auto child_of = [&](const Dam& closest) -> ChildView& {
    auto it = children.find(closest);
    if (it == children.end()) it = children.emplace(closest, make_child(ctx, idx.complement(closest), options.oracle)).first;
    return it->second;
  };

  std::map<std::tuple<std::size_t, PathMask, std::size_t>, std::size_t> filed;  // (h, sigma, i) -> cuts
  std::size_t drainage_cuts = 0;

  for (const EdgeCut& cut : oracle.cuts) {
    ++report.cuts_checked;
    const std::string tag = "cut " + list(cut.edges);
    CutTrace trace;
    trace.edges = cut.edges;

    // One edge per Menger path, prefix on the source side, suffix on the target side.
    const EdgeMask in_cut = edge_mask_of(inst.graph.num_edges(), cut.edges);
    for (std::size_t j = 0; j < p; ++j) {
      const MengerPath& q = ctx.menger.paths[j];
      std::size_t hits = 0;
      std::size_t pos = 0;
      for (std::size_t s = 0; s < q.edges.size(); ++s) {
        if (in_cut[static_cast<std::size_t>(q.edges[s])]) {
          ++hits;
          pos = s;
        }
      }
      if (hits != 1) {
        fail(tag + " meets Menger path " + std::to_string(j) + " in " + std::to_string(hits) + " edges");
        continue;
      }
      for (std::size_t s = 0; s < q.vertices.size(); ++s) {
        const auto x = static_cast<std::size_t>(q.vertices[s]);
        const bool ok = s <= pos ? cut.source_side[x] && !cut.target_side[x] : cut.target_side[x] && !cut.source_side[x];
        if (!ok) fail(tag + " does not split Menger path " + std::to_string(j) + " at its edge");
      }
    }

    FrontInfo front;
    try {
      front = front_of(cut.edges, ctx.drainage);
    } catch (const CutError&) {
      fail(tag + " has no front");
      continue;
    }
    trace.front = front.front;
    trace.front_dam = idx.dam_of(front.front_dam);
    trace.closest = idx.closest_dam_of(trace.front_dam);
    if (trace.front_dam.paths == idx.full_mask()) {
      trace.drainage_cut = true;
      ++drainage_cuts;
      if (record) report.traces.push_back(std::move(trace));
      continue;
    }
    const Dam& bi = trace.front_dam;
    const Dam& bh = trace.closest;
    if (!idx.is_closest(bh) || !idx.is_proper(bh)) fail(tag + " has closest dam " + name(bh) + " that is not a proper closest dam");
    ++filed[{bh.level, bh.paths, bi.level}];

    ChildView& child = child_of(bh);
    if (!child.sub) {
      fail(tag + ": dry instance of the complement of " + name(bh) + " has no target");
      if (record) report.traces.push_back(std::move(trace));
      continue;
    }
    std::vector<EdgeId> rest;
    std::vector<EdgeId> rest_local;
    const EdgeMask in_front = edge_mask_of(inst.graph.num_edges(), front.front_dam);
    bool contained = true;
    for (EdgeId e : cut.edges) {
      if (in_front[static_cast<std::size_t>(e)]) continue;
      rest.push_back(e);
      const EdgeId local = child.parent_to_child[static_cast<std::size_t>(e)];
      if (local < 0) contained = false;
      rest_local.push_back(local);
    }
    if (!contained) {
      fail(tag + ": " + list(rest) + " leaves the dry instance of the complement of " + name(bh));
    } else {
      const CutInstance& ci = child.sub->instance;
      std::sort(rest_local.begin(), rest_local.end());
      if (rest_local.size() != child.oracle->p || !is_cut(ci, rest_local)) {
        fail(tag + ": remainder is not a minimum cut of the dry instance of " + name(idx.complement(bh)));
      }
      const std::size_t lv = bi.level - bh.level + 1;
      if (lv > child.drainage->k()) {
        fail(tag + ": child drainage has no level " + std::to_string(lv));
      } else {
        std::vector<EdgeId> mapped;
        for (EdgeId e : child.drainage->level(lv)) mapped.push_back(child.sub->edge_to_parent[static_cast<std::size_t>(e)]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != idx.edges_of(idx.complement(bi))) {
          fail(tag + ": child level " + std::to_string(lv) + " " + list(mapped) + " differs from the complement of the front dam");
        }
        if (!inside(ci.graph, target_side(ci, *child.drainage, lv), rest_local)) {
          fail(tag + ": remainder is not on the target side of child level " + std::to_string(lv));
        }
      }
    }
    if (record) report.traces.push_back(std::move(trace));
  }

  if (drainage_cuts != ctx.drainage.k()) {
    fail(std::to_string(drainage_cuts) + " drainage cuts found, k=" + std::to_string(ctx.drainage.k()));
  }

  // Converse direction and per-term counts.
  for (const Dam& bh : idx.enumerate_closest_dams()) {
    ChildView& child = child_of(bh);
    for (std::size_t i : idx.levels_closed_by(bh)) {
      const std::size_t lv = i - bh.level + 1;
      std::size_t assembled = 0;
      if (child.sub && lv <= child.drainage->k()) {
        const CutInstance& ci = child.sub->instance;
        const VertexMask side = target_side(ci, *child.drainage, lv);
        const std::vector<EdgeId> front = idx.edges_of({i, bh.paths});
        for (const EdgeCut& x : child.oracle->cuts) {
          if (!inside(ci.graph, side, x.edges)) continue;
          ++assembled;
          std::vector<EdgeId> whole = front;
          for (EdgeId e : x.edges) whole.push_back(child.sub->edge_to_parent[static_cast<std::size_t>(e)]);
          std::sort(whole.begin(), whole.end());
          if (whole.size() != p || !is_cut(inst, whole)) {
            fail("assembled set " + list(whole) + " from " + name(bh) + " at level " + std::to_string(i) +
                 " is not a minimum cut");
          }
        }
      }
      const auto it = filed.find({bh.level, bh.paths, i});
      const std::size_t seen = it == filed.end() ? 0 : it->second;
      if (seen != assembled) {
        fail(name(bh) + " at level " + std::to_string(i) + ": " + std::to_string(seen) + " cuts filed, " +
             std::to_string(assembled) + " assembled");
      }
    }
  }
  std::size_t filed_total = 0;
  for (const auto& [key, c] : filed) filed_total += c;
  if (filed_total + drainage_cuts != oracle.cuts.size()) fail("cuts are not partitioned by front and closest dam");

  if (options.recursive) {
    for (auto& [bh, child] : children) {
      if (child.sub) audit_instance(child.sub->instance, options, where + "/" + name(idx.complement(bh)), false, report);
    }
  }
}

}  // namespace

AuditReport audit_theorems(const CutInstance& inst, AuditOptions options) {
  AuditReport report;
  audit_instance(inst, options, "root", true, report);
  return report;
}

AuditReport audit_dams(const CutInstance& inst) {
  AuditReport report;
  validate_instance(inst);
  const std::size_t p = min_cut_size(inst);
  report.p = p;
  if (p == 0) return report;
  ++report.instances_checked;
  const Context ctx(inst);
  const DamIndex& idx = *ctx.dams;
  const MultiGraph& g = inst.graph;
  auto fail = [&](const std::string& what) { report.violations.push_back(what); };

  for (std::size_t i = 1; i <= idx.k(); ++i) {
    for (PathMask mask = 1; mask <= idx.full_mask(); ++mask) {
      const Dam b{i, mask};
      if (static_cast<std::size_t>(std::popcount(mask)) != idx.edges_of(b).size()) fail(name(b) + " has a wrong signature size");

      std::vector<Dam> closer;
      for (std::size_t h = 1; h < i; ++h) {
        if (idx.is_closer({h, mask}, b)) closer.push_back({h, mask});
      }
      auto closest_from_scratch = [&](const Dam& c) {
        for (std::size_t h = 1; h < c.level; ++h) {
          if (idx.is_closer({h, c.paths}, c)) return false;
        }
        return true;
      };
      std::vector<Dam> candidates;
      if (closer.empty()) {
        candidates.push_back(b);
      } else {
        for (const Dam& c : closer) {
          if (closest_from_scratch(c)) candidates.push_back(c);
        }
      }
      if (candidates.size() != 1) {
        fail(name(b) + " has " + std::to_string(candidates.size()) + " closest dams");
      } else if (candidates.front() != idx.closest_dam_of(b)) {
        fail(name(b) + ": index reports closest " + name(idx.closest_dam_of(b)) + ", direct search " + name(candidates.front()));
      }
      for (std::size_t x = 0; x < closer.size(); ++x) {
        for (std::size_t y = x + 1; y < closer.size(); ++y) {
          if (!idx.is_closer(closer[x], closer[y])) fail(name(b) + ": closer dams " + name(closer[x]) + " and " + name(closer[y]) + " are not comparable");
        }
      }

      const VertexMask area = idx.dry_area(b);
      const EdgeMask in_dam = edge_mask_of(g.num_edges(), idx.edges_of(b));
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto id = static_cast<EdgeId>(e);
        const Edge& ed = g.edge(id);
        const bool au = area[static_cast<std::size_t>(ed.u)];
        const bool av = area[static_cast<std::size_t>(ed.v)];
        if (au == av) continue;
        if (!ctx.gd.directed(id)) {
          fail(name(b) + ": undirected edge " + std::to_string(e) + " crosses the dry area boundary");
        } else if (area[static_cast<std::size_t>(ctx.gd.head(g, id))] && !in_dam[e]) {
          fail(name(b) + ": arc " + std::to_string(e) + " enters the dry area but is not in the dam");
        }
      }

      if (idx.is_proper(b)) {
        const Dam other = idx.complement(b);
        const VertexMask other_area = idx.dry_area(other);
        for (std::size_t x = 0; x < area.size(); ++x) {
          if (area[x] && other_area[x]) {
            fail(name(b) + " and its complement both dry vertex " + std::to_string(x));
            break;
          }
        }
        if (idx.is_closest(b) && !idx.is_closest(other)) fail(name(b) + " is closest but its complement is not");
      }
    }
  }
  return report;
}

}  // namespace cutcount
