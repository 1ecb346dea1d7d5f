#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutcount/dams.hpp"
#include "cutcount/drainage.hpp"
#include "cutcount/flow.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

using BigCount = boost::multiprecision::cpp_int;

struct CountOptions {
  DrainageOptions drainage;
  /// Reuse one node for dry instances that cover the same root vertices,
  /// edges and terminals, even when reached through different parents.
  bool share_identical_children = false;
};

/// One proper closest dam B_h of a node, with the child D(J, complement of B_h).
struct Branch {
  Dam closest;
  std::vector<std::size_t> levels;  // every i whose restriction to closest.paths is closed by B_h
  std::optional<std::size_t> child; // node index; empty when the dry instance has no target
};

struct RecursionNode {
  CutInstance instance;
  std::vector<Vertex> vertex_to_root;
  std::vector<EdgeId> edge_to_root;
  std::size_t depth = 0;
  std::size_t p = 0;
  MengerPaths menger;
  Drainage drainage;
  OrientedGraph oriented;
  std::unique_ptr<DamIndex> dams;
  std::vector<Branch> branches;
  std::vector<std::optional<BigCount>> counts;  // counts[l] = C_l, l = 0..k

  std::size_t k() const noexcept { return drainage.k(); }
};

struct TreeStats {
  std::size_t instances = 0;
  std::size_t max_depth = 0;
  std::size_t memo_hits = 0;
  BigCount bound;  // 2^(p^2) * m of the root
  bool within_bounds = true;
};

/// The recursion tree of a connected instance (p >= 1). Every node is
/// built up front; suffix counts are filled on demand and cached.
class CountingTree {
 public:
  /// Throws CutError(disconnected) when p = 0 and CutError(depth_exceeded)
  /// if the recursion gets deeper than p - 1.
  explicit CountingTree(const CutInstance& root, CountOptions options = {});

  CountingTree(const CountingTree&) = delete;
  CountingTree& operator=(const CountingTree&) = delete;
  CountingTree(CountingTree&&) = default;
  CountingTree& operator=(CountingTree&&) = default;

  const RecursionNode& root() const { return *nodes_.front(); }
  const RecursionNode& node(std::size_t i) const { return *nodes_.at(i); }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// C_l of node `i`: the minimum cuts of that node using only edges of
  /// E[R(Z_l, T)]. l >= k gives 0.
  const BigCount& count_suffix(std::size_t i, std::size_t level);

  /// Computes every C_l of every node; afterwards count_at works.
  void fill_all();
  bool filled() const noexcept { return filled_; }

  /// Read-only lookup of a filled entry (0 for l >= k). Throws
  /// CutError(internal) if the entry has not been computed.
  const BigCount& count_at(std::size_t i, std::size_t level) const;

  TreeStats stats() const;

 private:
  std::size_t add_node(SubInstance sub, std::vector<Vertex> vertex_to_root, std::vector<EdgeId> edge_to_root,
                       std::size_t depth, MengerPaths menger, Drainage drainage);
  void expand(std::size_t i);

  CountOptions options_;
  std::size_t p_root_ = 0;
  std::size_t m_root_ = 0;
  std::size_t memo_hits_ = 0;
  bool filled_ = false;
  std::vector<std::unique_ptr<RecursionNode>> nodes_;
  std::map<std::vector<std::int32_t>, std::size_t> shared_;
};

struct CountResult {
  std::size_t p = 0;
  BigCount count;
};

/// Number of minimum (S,T)-cuts. A disconnected instance gives (0, 1): the
/// empty set is its only minimum cut.
CountResult count_min_cuts(const CutInstance& inst, CountOptions options = {});

/// Unit-capacity multigraph with the same minimum cuts as a weighted one.
struct WeightedExpansion {
  CutInstance instance;
  std::vector<EdgeId> edge_to_original;  // per expanded edge
  std::int64_t p = 0;                    // weighted minimum cut value
};

/// Replaces an edge of weight w by min(w, p+1) parallel copies, p being
/// the weighted minimum cut value. Throws CutError(non_positive_weight).
WeightedExpansion expand_weighted(const MultiGraph& graph, std::span<const std::int64_t> weights,
                                  std::span<const Vertex> sources, std::span<const Vertex> targets);

/// Maps an expanded edge set back to sorted, duplicate-free original ids.
std::vector<EdgeId> to_original_edges(const WeightedExpansion& ex, std::span<const EdgeId> edges);

/// Statistics of a finished tree, with the instance and depth bounds checked.
TreeStats instance_budget_check(const CountingTree& tree);

}  // namespace cutcount
