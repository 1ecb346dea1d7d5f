#include "cutcount/graph.hpp"

#include <algorithm>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : incidence_(n) {}

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
  if (!contains_vertex(u) || !contains_vertex(v)) {
    throw CutError(Errc::id_out_of_range, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") with n=" + std::to_string(num_vertices()));
  }
  if (u == v) throw CutError(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(id);
  incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

CutInstance::CutInstance(MultiGraph g, std::vector<Vertex> s, std::vector<Vertex> t)
    : graph(std::move(g)), sources(sorted_unique(std::move(s))), targets(sorted_unique(std::move(t))) {}

void validate_instance(const CutInstance& inst) {
  if (inst.sources.empty()) throw CutError(Errc::empty_terminal_set, "source set S is empty");
  if (inst.targets.empty()) throw CutError(Errc::empty_terminal_set, "target set T is empty");
  for (const auto* set : {&inst.sources, &inst.targets}) {
    for (Vertex x : *set) {
      if (!inst.graph.contains_vertex(x)) {
        throw CutError(Errc::id_out_of_range, "terminal vertex " + std::to_string(x));
      }
    }
  }
  std::vector<Vertex> common;
  std::set_intersection(inst.sources.begin(), inst.sources.end(), inst.targets.begin(), inst.targets.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw CutError(Errc::disjointness_violation, "vertex " + std::to_string(common.front()) + " is in both S and T");
  }
  for (const Edge& e : inst.graph.edges()) {
    if (e.u == e.v) throw CutError(Errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
  }
}

VertexMask reachable(const MultiGraph& graph, std::span<const Vertex> seeds, const EdgeMask& removed) {
  VertexMask seen(graph.num_vertices(), false);
  std::vector<Vertex> stack;
  for (Vertex s : seeds) {
    if (!graph.contains_vertex(s)) throw CutError(Errc::id_out_of_range, "seed vertex " + std::to_string(s));
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      stack.push_back(s);
    }
  }
  const bool any_removed = !removed.empty();
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : graph.incident(x)) {
      if (any_removed && removed[static_cast<std::size_t>(e)]) continue;
      const Vertex y = graph.edge(e).other(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

VertexMask reachable(const MultiGraph& graph, std::span<const Vertex> seeds, std::span<const EdgeId> removed) {
  return reachable(graph, seeds, edge_mask_of(graph.num_edges(), removed));
}

bool is_cut(const CutInstance& inst, std::span<const EdgeId> edges) {
  const VertexMask side = reachable(inst.graph, inst.sources, edges);
  return std::none_of(inst.targets.begin(), inst.targets.end(),
                      [&](Vertex t) { return side[static_cast<std::size_t>(t)]; });
}

EdgeCut make_cut(const CutInstance& inst, std::span<const EdgeId> edges) {
  EdgeCut cut;
  cut.edges.assign(edges.begin(), edges.end());
  std::sort(cut.edges.begin(), cut.edges.end());
  const EdgeMask removed = edge_mask_of(inst.graph.num_edges(), cut.edges);
  cut.source_side = reachable(inst.graph, inst.sources, removed);
  cut.target_side = reachable(inst.graph, inst.targets, removed);
  return cut;
}

VertexMask mask_of(std::size_t n, std::span<const Vertex> members) {
  VertexMask mask(n, false);
  for (Vertex x : members) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw CutError(Errc::id_out_of_range, "vertex " + std::to_string(x));
    mask[static_cast<std::size_t>(x)] = true;
  }
  return mask;
}

EdgeMask edge_mask_of(std::size_t m, std::span<const EdgeId> members) {
  EdgeMask mask(m, false);
  for (EdgeId e : members) {
    if (e < 0 || static_cast<std::size_t>(e) >= m) throw CutError(Errc::id_out_of_range, "edge " + std::to_string(e));
    mask[static_cast<std::size_t>(e)] = true;
  }
  return mask;
}

std::vector<Vertex> members_of(const VertexMask& mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

SubInstance extract(const MultiGraph& parent, const VertexMask& vertices, std::span<const EdgeId> edges,
                    std::span<const Vertex> sources, std::span<const Vertex> targets) {
  SubInstance sub;
  std::vector<Vertex> local(parent.num_vertices(), -1);
  for (std::size_t x = 0; x < parent.num_vertices(); ++x) {
    if (vertices[x]) {
      local[x] = static_cast<Vertex>(sub.vertex_to_parent.size());
      sub.vertex_to_parent.push_back(static_cast<Vertex>(x));
    }
  }
  std::vector<EdgeId> sorted_edges(edges.begin(), edges.end());
  std::sort(sorted_edges.begin(), sorted_edges.end());
  sorted_edges.erase(std::unique(sorted_edges.begin(), sorted_edges.end()), sorted_edges.end());

  MultiGraph g(sub.vertex_to_parent.size());
  for (EdgeId e : sorted_edges) {
    const Edge& pe = parent.edge(e);
    const Vertex lu = local[static_cast<std::size_t>(pe.u)];
    const Vertex lv = local[static_cast<std::size_t>(pe.v)];
    if (lu < 0 || lv < 0) throw CutError(Errc::internal, "extracted edge leaves the vertex set");
    g.add_edge(lu, lv);
    sub.edge_to_parent.push_back(e);
  }
  auto translate = [&](std::span<const Vertex> xs) {
    std::vector<Vertex> out;
    for (Vertex x : xs) {
      const Vertex lx = local[static_cast<std::size_t>(x)];
      if (lx < 0) throw CutError(Errc::internal, "terminal outside the extracted vertex set");
      out.push_back(lx);
    }
    return out;
  };
  sub.instance = CutInstance(std::move(g), translate(sources), translate(targets));
  return sub;
}

}  // namespace cutcount
