#include "cutcount_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cutcount/counting.hpp"
#include "cutcount/drainage.hpp"
#include "cutcount/errors.hpp"
#include "cutcount/graph_file.hpp"
#include "cutcount/oracle.hpp"
#include "cutcount/sampling.hpp"

namespace cutcount::cli {

namespace {

GraphFile read_file(const std::string& path) {
  if (path == "-") return parse_graph_file(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph_file(in);
}

void print_ids(std::ostream& out, std::span<const std::int32_t> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i] + 1;
}

int cmd_count(const std::string& path, bool stats, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const LoadedInstance loaded = load_instance(read_file(path));
  if (min_cut_size(loaded.instance) == 0) {
    out << "p 0\ncount 1\n";
    if (stats) out << "instances 0\nmax_depth 0\nmemo_hits 0\n";
  } else {
    CountingTree tree(loaded.instance);
    const BigCount count = tree.count_suffix(0, 0);
    out << "p " << loaded.p(tree.root().p) << "\ncount " << count.str() << '\n';
    if (stats) {
      const TreeStats st = instance_budget_check(tree);
      out << "instances " << st.instances << "\nmax_depth " << st.max_depth << "\nmemo_hits " << st.memo_hits
          << "\nbound " << st.bound.str() << '\n';
    }
  }
  if (stats) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << "elapsed_ms " << ms << '\n';
  }
  return exit_ok;
}

int cmd_sample(const std::string& path, std::size_t num, std::uint64_t seed, std::ostream& out) {
  const LoadedInstance loaded = load_instance(read_file(path));
  for (const auto& cut : sample_min_cuts(loaded.instance, num, seed)) {
    print_ids(out, loaded.to_file_edges(cut));
    out << '\n';
  }
  return exit_ok;
}

int cmd_drainage(const std::string& path, std::ostream& out, std::ostream& err) {
  const LoadedInstance loaded = load_instance(read_file(path));
  const CutInstance& inst = loaded.instance;
  if (min_cut_size(inst) == 0) {
    out << "p 0\n";
    err << "note: sources and targets are disconnected; the drainage is empty\n";
    return exit_ok;
  }
  const Drainage d = build_drainage(inst);
  out << "p " << loaded.p(d.p) << "\nk " << d.k() << '\n';
  for (std::size_t i = 1; i <= d.k() + 1; ++i) {
    if (i <= d.k()) {
      out << "level " << i << ':';
      for (EdgeId e : loaded.to_file_edges(d.level(i))) out << ' ' << e + 1;
      out << '\n';
    }
    out << "region " << i << ':';
    for (Vertex x : d.region(i)) out << ' ' << x + 1;
    out << '\n';
  }
  return exit_ok;
}

int cmd_verify(const std::string& path, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  const LoadedInstance loaded = load_instance(read_file(path));
  const CutInstance& inst = loaded.instance;
  AuditOptions options;
  options.oracle.budget = budget;

  const CountResult fast = count_min_cuts(inst);
  const CountResult slow = brute_force_count(inst, options.oracle);
  out << "p " << loaded.p(fast.p) << "\ncount " << fast.count.str() << "\noracle " << slow.count.str() << '\n';
  int code = exit_ok;
  if (fast.p != slow.p || fast.count != slow.count) {
    err << "mismatch: counter gives p=" << fast.p << " count=" << fast.count.str() << ", oracle gives p=" << slow.p
        << " count=" << slow.count.str() << '\n';
    code = exit_mismatch;
  }
  if (slow.p > 0) {
    AuditReport audit = audit_theorems(inst, options);
    const AuditReport dams = audit_dams(inst);
    audit.violations.insert(audit.violations.end(), dams.violations.begin(), dams.violations.end());
    if (audit.ok()) {
      out << "audit ok " << audit.cuts_checked << " cuts " << audit.instances_checked << " instances\n";
    } else {
      out << "audit failed " << audit.violations.size() << " violations\n";
      for (const std::string& v : audit.violations) err << "violation: " << v << '\n';
      code = exit_mismatch;
    }
  } else {
    out << "audit skipped p=0\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and uniform sampling of minimum edge (S,T)-cuts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cutcount 0.1.0");

  std::string path;
  bool stats = false;
  std::size_t num = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = OracleOptions{}.budget;

  auto* count = app.add_subcommand("count", "Print the minimum cut size p and the number of minimum cuts");
  count->add_option("file", path, "Instance file, or - for stdin")->required();
  count->add_flag("--stats", stats, "Also print recursion tree statistics");

  auto* sample = app.add_subcommand("sample", "Print uniformly random minimum cuts, one per line");
  sample->add_option("file", path, "Instance file, or - for stdin")->required();
  sample->add_option("--num", num, "Number of cuts")->capture_default_str();
  sample->add_option("--seed", seed, "Generator seed")->capture_default_str();

  auto* drainage = app.add_subcommand("drainage", "Print the drainage levels and regions");
  drainage->add_option("file", path, "Instance file, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "Check the counter and its structure against brute force");
  verify->add_option("file", path, "Instance file, or - for stdin")->required();
  verify->add_option("--budget", budget, "Largest number of edge subsets the oracle may test")->capture_default_str();

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << "cutcount 0.1.0\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (count->parsed()) return cmd_count(path, stats, out);
    if (sample->parsed()) return cmd_sample(path, num, seed, out);
    if (drainage->parsed()) return cmd_drainage(path, out, err);
    return cmd_verify(path, budget, out, err);
  } catch (const CutError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::budget_exceeded:
        return exit_budget;
      case Errc::internal:
      case Errc::probability_leak:
      case Errc::depth_exceeded:
      case Errc::path_edge_conflict:
        return exit_internal;
      default:
        return exit_usage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace cutcount::cli
