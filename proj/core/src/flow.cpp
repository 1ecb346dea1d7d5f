#include "cutcount/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "cutcount/errors.hpp"

namespace cutcount {

UnitFlow::UnitFlow(const MultiGraph& graph, VertexMask live, std::span<const Vertex> sources,
                   std::span<const Vertex> targets)
    : graph_(&graph),
      live_(std::move(live)),
      is_source_(graph.num_vertices(), false),
      is_target_(graph.num_vertices(), false),
      state_(graph.num_edges(), 0) {
  for (Vertex s : sources) {
    if (!graph.contains_vertex(s)) throw CutError(Errc::id_out_of_range, "source " + std::to_string(s));
    if (live_[static_cast<std::size_t>(s)] && !is_source_[static_cast<std::size_t>(s)]) {
      is_source_[static_cast<std::size_t>(s)] = true;
      sources_.push_back(s);
    }
  }
  for (Vertex t : targets) {
    if (!graph.contains_vertex(t)) throw CutError(Errc::id_out_of_range, "target " + std::to_string(t));
    if (live_[static_cast<std::size_t>(t)]) is_target_[static_cast<std::size_t>(t)] = true;
  }
  std::sort(sources_.begin(), sources_.end());
}

UnitFlow::UnitFlow(const MultiGraph& graph, std::span<const Vertex> sources, std::span<const Vertex> targets)
    : UnitFlow(graph, VertexMask(graph.num_vertices(), true), sources, targets) {}

bool UnitFlow::edge_live(EdgeId e) const {
  const Edge& ed = graph_->edge(e);
  return live_[static_cast<std::size_t>(ed.u)] && live_[static_cast<std::size_t>(ed.v)];
}

void UnitFlow::push_path(std::span<const Vertex> vertices, std::span<const EdgeId> edges) {
  if (vertices.size() != edges.size() + 1) throw CutError(Errc::internal, "malformed warm-start path");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeId e = edges[i];
    if (!edge_live(e) || state_[static_cast<std::size_t>(e)] != 0) {
      throw CutError(Errc::internal, "warm-start path reuses or leaves the live graph at edge " + std::to_string(e));
    }
    state_[static_cast<std::size_t>(e)] = direction(graph_->edge(e), vertices[i]);
  }
  ++value_;
}

std::size_t UnitFlow::augment(std::size_t limit) {
  const std::size_t n = graph_->num_vertices();
  std::vector<EdgeId> via(n);
  std::vector<bool> seen(n);
  std::deque<Vertex> queue;
  while (value_ < limit) {
    std::fill(seen.begin(), seen.end(), false);
    queue.clear();
    for (Vertex s : sources_) {
      seen[static_cast<std::size_t>(s)] = true;
      via[static_cast<std::size_t>(s)] = -1;
      queue.push_back(s);
    }
    Vertex reached = -1;
    for (Vertex s : sources_) {
      if (is_target_[static_cast<std::size_t>(s)]) reached = s;
    }
    while (reached < 0 && !queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : graph_->incident(x)) {
        if (!edge_live(e)) continue;
        const Edge& ed = graph_->edge(e);
        if (state_[static_cast<std::size_t>(e)] == direction(ed, x)) continue;  // saturated x->y
        const Vertex y = ed.other(x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        via[static_cast<std::size_t>(y)] = e;
        if (is_target_[static_cast<std::size_t>(y)]) {
          reached = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (reached < 0) break;
    if (via[static_cast<std::size_t>(reached)] < 0) {
      // A vertex that is both source and target: no finite cut exists.
      throw CutError(Errc::disjointness_violation, "vertex " + std::to_string(reached) + " is both source and target");
    }
    for (Vertex y = reached; via[static_cast<std::size_t>(y)] >= 0;) {
      const EdgeId e = via[static_cast<std::size_t>(y)];
      const Edge& ed = graph_->edge(e);
      const Vertex x = ed.other(y);
      state_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(state_[static_cast<std::size_t>(e)] + direction(ed, x));
      y = x;
    }
    ++value_;
  }
  return value_;
}

VertexMask UnitFlow::residual_source_side() const {
  VertexMask seen(graph_->num_vertices(), false);
  std::vector<Vertex> stack;
  for (Vertex s : sources_) {
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : graph_->incident(x)) {
      if (!edge_live(e)) continue;
      const Edge& ed = graph_->edge(e);
      if (state_[static_cast<std::size_t>(e)] == direction(ed, x)) continue;
      const Vertex y = ed.other(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<EdgeId> UnitFlow::boundary(const VertexMask& side) const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < graph_->num_edges(); ++e) {
    const auto id = static_cast<EdgeId>(e);
    if (!edge_live(id)) continue;
    const Edge& ed = graph_->edge(id);
    if (side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)]) out.push_back(id);
  }
  return out;
}

MengerPaths UnitFlow::decompose() const {
  std::vector<std::int8_t> st = state_;
  const std::size_t n = graph_->num_vertices();
  std::vector<std::ptrdiff_t> pos(n, -1);
  MengerPaths result;

  auto next_out = [&](Vertex x) -> EdgeId {
    for (EdgeId e : graph_->incident(x)) {
      if (st[static_cast<std::size_t>(e)] != 0 && st[static_cast<std::size_t>(e)] == direction(graph_->edge(e), x)) {
        return e;
      }
    }
    return -1;
  };

  for (Vertex s : sources_) {
    for (EdgeId first = next_out(s); first >= 0; first = next_out(s)) {
      MengerPath path;
      path.vertices.push_back(s);
      pos[static_cast<std::size_t>(s)] = 0;
      EdgeId e = first;
      Vertex x = s;
      while (true) {
        st[static_cast<std::size_t>(e)] = 0;
        const Vertex y = graph_->edge(e).other(x);
        if (pos[static_cast<std::size_t>(y)] >= 0) {
          // Closed a flow cycle: drop it.
          const auto keep = static_cast<std::size_t>(pos[static_cast<std::size_t>(y)]);
          for (std::size_t i = keep + 1; i < path.vertices.size(); ++i) {
            pos[static_cast<std::size_t>(path.vertices[i])] = -1;
          }
          path.vertices.resize(keep + 1);
          path.edges.resize(keep);
        } else {
          pos[static_cast<std::size_t>(y)] = static_cast<std::ptrdiff_t>(path.vertices.size());
          path.vertices.push_back(y);
          path.edges.push_back(e);
        }
        x = y;
        if (is_target_[static_cast<std::size_t>(x)]) break;
        e = next_out(x);
        if (e < 0) throw CutError(Errc::internal, "flow conservation broken at vertex " + std::to_string(x));
      }
      for (Vertex v : path.vertices) pos[static_cast<std::size_t>(v)] = -1;
      result.paths.push_back(std::move(path));
    }
  }
  if (result.p() != value_) throw CutError(Errc::internal, "flow decomposition lost paths");
  return result;
}

MengerPaths max_disjoint_paths(const CutInstance& inst) {
  UnitFlow flow(inst.graph, inst.sources, inst.targets);
  flow.augment();
  return flow.decompose();
}

std::size_t min_cut_size(const CutInstance& inst) {
  UnitFlow flow(inst.graph, inst.sources, inst.targets);
  return flow.augment();
}

EdgeCut closest_min_cut(const CutInstance& inst) {
  UnitFlow flow(inst.graph, inst.sources, inst.targets);
  if (flow.augment() == 0) throw CutError(Errc::disconnected, "S and T are not connected");
  return make_cut(inst, flow.boundary(flow.residual_source_side()));
}

std::int64_t weighted_min_cut_value(const MultiGraph& graph, std::span<const std::int64_t> weights,
                                    std::span<const Vertex> sources, std::span<const Vertex> targets) {
  const std::size_t n = graph.num_vertices();
  // forward[e] = flow along (u,v); residual capacity x->y is w - f(x->y).
  std::vector<std::int64_t> flow(graph.num_edges(), 0);
  const VertexMask is_target = mask_of(n, targets);
  std::int64_t total = 0;
  auto residual = [&](EdgeId e, Vertex from) {
    const Edge& ed = graph.edge(e);
    const std::int64_t along = from == ed.u ? flow[static_cast<std::size_t>(e)] : -flow[static_cast<std::size_t>(e)];
    return weights[static_cast<std::size_t>(e)] - along;
  };
  std::vector<EdgeId> via(n);
  std::vector<bool> seen(n);
  while (true) {
    std::fill(seen.begin(), seen.end(), false);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
      seen[static_cast<std::size_t>(s)] = true;
      via[static_cast<std::size_t>(s)] = -1;
      queue.push_back(s);
    }
    Vertex reached = -1;
    while (reached < 0 && !queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : graph.incident(x)) {
        if (residual(e, x) <= 0) continue;
        const Vertex y = graph.edge(e).other(x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        via[static_cast<std::size_t>(y)] = e;
        if (is_target[static_cast<std::size_t>(y)]) {
          reached = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (reached < 0) break;
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (Vertex y = reached; via[static_cast<std::size_t>(y)] >= 0;) {
      const EdgeId e = via[static_cast<std::size_t>(y)];
      const Vertex x = graph.edge(e).other(y);
      bottleneck = std::min(bottleneck, residual(e, x));
      y = x;
    }
    for (Vertex y = reached; via[static_cast<std::size_t>(y)] >= 0;) {
      const EdgeId e = via[static_cast<std::size_t>(y)];
      const Edge& ed = graph.edge(e);
      const Vertex x = ed.other(y);
      flow[static_cast<std::size_t>(e)] += x == ed.u ? bottleneck : -bottleneck;
      y = x;
    }
    total += bottleneck;
  }
  return total;
}

}  // namespace cutcount
