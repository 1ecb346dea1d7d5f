#include "cutcount/graph_file.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cutcount/errors.hpp"

namespace cutcount {

bool GraphFile::weighted() const {
  return std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w != 1; });
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t number(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

Vertex vertex(std::string_view tok, std::size_t line, std::size_t n) {
  const std::int64_t v = number(tok, line, "vertex id");
  if (v < 1 || static_cast<std::uint64_t>(v) > n) {
    throw ParseError(line, "vertex " + std::string(tok) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
  GraphFile file;
  bool header = false;
  std::size_t declared_m = 0;
  std::size_t lineno = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::vector<std::string_view> tok = tokens(raw);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (header) throw ParseError(lineno, "second problem line");
      if (tok.size() != 4 || tok[1] != "cut") throw ParseError(lineno, "expected 'p cut <n> <m>'");
      const std::int64_t n = number(tok[2], lineno, "vertex count");
      const std::int64_t m = number(tok[3], lineno, "edge count");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative size");
      file.n = static_cast<std::size_t>(n);
      declared_m = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "'p cut' line must come first");
    if (kind == "s" || kind == "t") {
      if (tok.size() < 2) throw ParseError(lineno, "terminal line lists no vertex");
      auto& dest = kind == "s" ? file.sources : file.targets;
      for (std::size_t i = 1; i < tok.size(); ++i) dest.push_back(vertex(tok[i], lineno, file.n));
    } else if (kind == "e") {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(lineno, "expected 'e <u> <v> [<weight>]'");
      const Vertex u = vertex(tok[1], lineno, file.n);
      const Vertex v = vertex(tok[2], lineno, file.n);
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u + 1));
      const std::int64_t w = tok.size() == 4 ? number(tok[3], lineno, "weight") : 1;
      if (w <= 0) throw ParseError(lineno, "weight must be positive");
      if (file.edges.size() == declared_m) throw ParseError(lineno, "more edges than declared");
      file.edges.push_back({u, v});
      file.weights.push_back(w);
    } else {
      throw ParseError(lineno, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'p cut' line");
  if (file.edges.size() != declared_m) {
    throw ParseError(lineno, "declared " + std::to_string(declared_m) + " edges, found " + std::to_string(file.edges.size()));
  }
  if (file.sources.empty()) throw ParseError(lineno, "no source vertex");
  if (file.targets.empty()) throw ParseError(lineno, "no target vertex");
  return file;
}

GraphFile parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_file(in);
}

std::string format_graph_file(const GraphFile& file) {
  std::ostringstream os;
  os << "p cut " << file.n << ' ' << file.edges.size() << '\n';
  os << 's';
  for (Vertex s : file.sources) os << ' ' << s + 1;
  os << "\nt";
  for (Vertex t : file.targets) os << ' ' << t + 1;
  os << '\n';
  for (std::size_t e = 0; e < file.edges.size(); ++e) {
    os << "e " << file.edges[e].u + 1 << ' ' << file.edges[e].v + 1;
    if (file.weights[e] != 1) os << ' ' << file.weights[e];
    os << '\n';
  }
  return os.str();
}

std::vector<EdgeId> LoadedInstance::to_file_edges(std::span<const EdgeId> edges) const {
  if (expansion) return to_original_edges(*expansion, edges);
  std::vector<EdgeId> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

LoadedInstance load_instance(const GraphFile& file) {
  MultiGraph g(file.n);
  for (const Edge& e : file.edges) g.add_edge(e.u, e.v);
  LoadedInstance loaded;
  if (file.weighted()) {
    loaded.expansion = expand_weighted(g, file.weights, file.sources, file.targets);
    loaded.instance = loaded.expansion->instance;
  } else {
    loaded.instance = CutInstance(std::move(g), file.sources, file.targets);
    validate_instance(loaded.instance);
  }
  return loaded;
}

}  // namespace cutcount
