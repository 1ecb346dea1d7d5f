#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cutcount/counting.hpp"
#include "cutcount/dams.hpp"
#include "cutcount/drainage.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

struct OracleOptions {
  /// Largest total number of edge subsets examined before giving up.
  std::uint64_t budget = 5'000'000;
};

/// Exhaustive subset search. The minimum cut size is found by trying sizes
/// 0, 1, 2, ... in turn, so no flow computation is involved.
/// Throws CutError(budget_exceeded) once the budget would be overrun.
CountResult brute_force_count(const CutInstance& inst, OracleOptions options = {});

/// Per-cut trace recorded by the audit.
struct CutTrace {
  std::vector<EdgeId> edges;
  std::size_t front = 0;          // i(X)
  Dam front_dam;                  // B_i(X)
  Dam closest;                    // h(X) and its signature
  bool drainage_cut = false;      // X = Z_i(X)
};

struct OracleReport {
  std::size_t p = 0;
  std::vector<EdgeCut> cuts;  // colex order of their edge sets
  std::vector<CutTrace> traces;  // filled by audit_theorems only
};

/// All minimum cuts, in colexicographic order of their sorted edge lists.
OracleReport brute_force_enumerate(const CutInstance& inst, OracleOptions options = {});

struct AuditOptions {
  OracleOptions oracle;
  /// Re-run the audit on every dry instance the recursion would visit.
  bool recursive = true;
};

struct AuditReport {
  std::size_t p = 0;
  std::size_t cuts_checked = 0;
  std::size_t instances_checked = 0;
  std::vector<CutTrace> traces;      // root instance only
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks, against the exhaustive listing of minimum cuts:
///  - every cut takes one edge per Menger path, splitting it into a
///    source-side prefix and a target-side suffix;
///  - every cut has a front;
///  - a non-drainage cut X minus its front dam is a minimum cut of the dry
///    instance of the complement of its closest dam, inside the target side
///    of child level i(X)-h(X)+1, which equals the complement of B_i(X);
///  - conversely every such union is a minimum cut, and the number of cuts
///    filed under each (closest dam, level) matches the child listing.
/// Throws CutError(budget_exceeded) from the oracle.
AuditReport audit_theorems(const CutInstance& inst, AuditOptions options = {});

/// Drainage sanity: each level is a minimum cut of size p, levels are
/// pairwise disjoint, source sides strictly grow and k < n. Returns one
/// message per violation.
std::vector<std::string> drainage_violations(const CutInstance& inst, const Drainage& d);

/// Structural checks over every dam of the drainage: the closest dam exists
/// and is unique, closer dams form a chain, complements of closest dams
/// are closest, only dam arcs enter a dry area, and a dam and its
/// complement dry disjoint areas.
AuditReport audit_dams(const CutInstance& inst);

}  // namespace cutcount
