#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutcount/counting.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// Text instance format, one record per line:
///
///   c <comment>
///   p cut <n> <m>          first non-comment line, exactly once
///   s <vertex>...          sources (may repeat)
///   t <vertex>...          targets (may repeat)
///   e <u> <v> [<weight>]   exactly m times; weight defaults to 1
///
/// Vertex ids are 1-based in the file and 0-based in memory. Blank lines
/// are ignored.
struct GraphFile {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::int64_t> weights;
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;

  bool weighted() const;
};

/// Throws ParseError with the offending line number.
GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_text(std::string_view text);

std::string format_graph_file(const GraphFile& file);

/// The unit instance the algorithms run on. Weighted files go through
/// expand_weighted; `expansion` then maps edges back to file edges.
struct LoadedInstance {
  CutInstance instance;
  std::optional<WeightedExpansion> expansion;

  /// Sorted, duplicate-free 0-based file edge indices of an instance edge set.
  std::vector<EdgeId> to_file_edges(std::span<const EdgeId> edges) const;
  /// Cut size in file weights.
  std::int64_t p(std::size_t unit_p) const { return expansion ? expansion->p : static_cast<std::int64_t>(unit_p); }
};

LoadedInstance load_instance(const GraphFile& file);

}  // namespace cutcount
