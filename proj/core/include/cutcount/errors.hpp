#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutcount {

enum class Errc {
  empty_terminal_set,
  disjointness_violation,
  id_out_of_range,
  self_loop,
  disconnected,
  no_front,
  path_edge_conflict,
  empty_target,
  depth_exceeded,
  no_cuts,
  probability_leak,
  budget_exceeded,
  non_positive_weight,
  parse_error,
  parameter_too_large,
  internal,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class CutError : public std::runtime_error {
 public:
  CutError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures remember the 1-based line they occurred on (0 if not tied to a line).
class ParseError : public CutError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : CutError(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cutcount
