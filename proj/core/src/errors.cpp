#include "cutcount/errors.hpp"

namespace cutcount {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_terminal_set: return "EmptyTerminalSet";
    case Errc::disjointness_violation: return "DisjointnessViolation";
    case Errc::id_out_of_range: return "IdOutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::disconnected: return "Disconnected";
    case Errc::no_front: return "NoFront";
    case Errc::path_edge_conflict: return "PathEdgeConflict";
    case Errc::empty_target: return "EmptyTarget";
    case Errc::depth_exceeded: return "DepthExceeded";
    case Errc::no_cuts: return "NoCuts";
    case Errc::probability_leak: return "ProbabilityLeak";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::parse_error: return "ParseError";
    case Errc::parameter_too_large: return "ParameterTooLarge";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace cutcount
