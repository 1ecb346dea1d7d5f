#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutcount/counting.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

using Rational = boost::multiprecision::cpp_rational;

/// Draws from a filled CountingTree. The generator is std::mt19937_64,
/// whose output sequence is fixed by the C++ standard, so a seed gives the
/// same cuts on every conforming platform.
class SamplerState {
 public:
  /// Throws CutError(internal) if `tree` has not been filled.
  SamplerState(const CountingTree& tree, std::uint64_t seed);

  /// A uniformly random minimum cut of the root, as sorted root edge ids.
  std::vector<EdgeId> sample();

  /// Uniform integer in [0, bound). bound must be positive.
  BigCount uniform_below(const BigCount& bound);

  const CountingTree& tree() const noexcept { return *tree_; }

 private:
  const CountingTree* tree_;
  std::mt19937_64 rng_;
};

/// The cut with rank r in [0, C_0) under the descent order: drainage cuts
/// first, then branches by closest dam and level. Sampling draws r uniformly.
/// Throws CutError(probability_leak) if the branch weights at a node do
/// not add up to its count, CutError(id_out_of_range) if r >= C_0.
std::vector<EdgeId> unrank_min_cut(const CountingTree& tree, BigCount r);

/// One draw. `p = 0` instances give the empty cut.
EdgeCut sample_min_cut(const CutInstance& inst, SamplerState& st);

std::vector<std::vector<EdgeId>> sample_many(SamplerState& st, std::size_t count);

/// Every cut reachable by the descent, with the exact probability of
/// reaching it. Exponential in general; meant for small audits.
std::map<std::vector<EdgeId>, Rational> descent_distribution(const CountingTree& tree);

/// Convenience: counts, fills and draws `count` cuts of `inst`. A
/// disconnected instance yields `count` empty cuts.
std::vector<std::vector<EdgeId>> sample_min_cuts(const CutInstance& inst, std::size_t count, std::uint64_t seed,
                                                 CountOptions options = {});

}  // namespace cutcount
