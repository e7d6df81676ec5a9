// unionsep: command-line front end for the unionsep library.
//
// Exit codes: 0 success / SAT / PASS, 1 definitive negative, 2 usage or
// parse error, 3 resource limit.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <unionsep/unionsep.hpp>

using namespace unionsep;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kLimit = 3 };

// "key: value" for people, "key=value" for scripts.
class Report {
public:
  explicit Report(bool machine) : machine_(machine) {}

  template <class T> void field(const std::string &key, const T &value) {
    std::cout << key << (machine_ ? "=" : ": ") << value << '\n';
  }
  void line(const std::string &text) {
    if (!machine_)
      std::cout << text << '\n';
  }
  bool machine() const { return machine_; }

private:
  bool machine_;
};

std::string join(const std::vector<Vertex> &vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i)
    os << (i ? "," : "") << vs[i];
  return os.str();
}

std::string format_coloring(const Coloring &c) {
  std::ostringstream os;
  for (std::size_t v = 0; v < c.size(); ++v)
    os << (v ? " " : "") << v << ':' << c[v];
  return os.str();
}

void write_file(const std::string &path,
                const std::function<void(std::ostream &)> &emit) {
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  emit(out);
}

struct Options {
  std::string format = "human";
  std::string graph, lists, golden, emit, graph_out, lists_out, family;
  std::size_t k = 0, t = 0;
  std::optional<Color> universe;
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 0.0;
  std::uint64_t seed = 20240601;
  std::size_t count = 1000, max_n = 7, t_min = 5, t_max = 8;
};

SeparationParams params(const Options &o) { return {o.k, o.t}; }

int run_solve(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  const auto L = io::parse_lists_file(o.lists, g.order(), o.universe);
  SolveOptions opts;
  opts.max_nodes = o.max_nodes;
  const auto r = solve(g, L, opts);
  out.field("verdict", to_string(r.verdict));
  out.field("nodes", r.nodes_explored);
  if (r.sat()) {
    out.field("coloring", format_coloring(*r.witness));
    if (!o.emit.empty())
      write_file(o.emit, [&](std::ostream &s) { io::write_coloring(s, *r.witness); });
    return kOk;
  }
  return r.unsat() ? kNegative : kLimit;
}

int run_check_choosable(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  ChoosabilityLimits limits;
  limits.max_nodes = o.max_nodes;
  limits.max_seconds = o.max_seconds;
  const auto r = decide_choosable(g, params(o), limits);
  out.field("verdict", to_string(r.verdict));
  out.field("assignments_tested", r.assignments_tested);
  out.field("nodes", r.nodes);
  switch (r.verdict) {
  case Choosability::Choosable:
    return kOk;
  case Choosability::NotChoosable:
    if (out.machine()) {
      for (std::size_t v = 0; v < r.witness->size(); ++v) {
        std::ostringstream list;
        for (Color c : (*r.witness)[v].to_vector())
          list << ' ' << c;
        out.field("witness." + std::to_string(v), list.str().substr(1));
      }
    } else {
      out.line("witness:");
      io::write_lists(std::cout, *r.witness);
    }
    if (!o.emit.empty())
      write_file(o.emit, [&](std::ostream &s) { io::write_lists(s, *r.witness); });
    return kNegative;
  case Choosability::ResourceLimit:
    return kLimit;
  }
  return kUsage;
}

int run_verify_witness(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  const auto L = io::parse_lists_file(o.lists, g.order(), o.universe);
  const auto valid = is_valid_assignment(g, L, params(o));
  out.field("valid_assignment", valid.ok ? "true" : "false");
  if (!valid) {
    out.field("reason", valid.violation->describe());
    out.field("verdict", "FAIL");
    return kNegative;
  }
  const auto r = solve(g, L);
  out.field("solver", to_string(r.verdict));
  out.field("nodes", r.nodes_explored);
  const bool ok = r.unsat();
  out.field("verdict", ok ? "PASS" : "FAIL");
  return ok ? kOk : kNegative;
}

int run_construct(const Options &o, Report &out) {
  ConstructedInstance inst;
  if (o.family == "book")
    inst = build_book(o.k, o.t);
  else if (o.family == "gadget35")
    inst = build_gadget35();
  else
    throw UsageError("unknown family '" + o.family + "' (book, gadget35)");

  if (o.graph_out.empty() && o.lists_out.empty()) {
    io::write_graph(std::cout, inst.graph);
    std::cout << '\n';
    io::write_lists(std::cout, inst.lists);
    return kOk;
  }
  if (!o.graph_out.empty())
    write_file(o.graph_out, [&](std::ostream &s) { io::write_graph(s, inst.graph); });
  if (!o.lists_out.empty())
    write_file(o.lists_out, [&](std::ostream &s) { io::write_lists(s, inst.lists); });
  out.field("vertices", inst.graph.order());
  out.field("edges", inst.graph.size());
  out.field("k", inst.params.k);
  out.field("t", inst.params.t);
  if (inst.construction_t != inst.params.t)
    out.field("built_for_t", inst.construction_t);
  out.field("average_degree", to_string(inst.graph.average_degree()));
  return kOk;
}

int run_mad(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  const auto r = mad_exact(g);
  out.field("mad", to_string(r.value));
  out.field("witness", join(r.witness));
  return kOk;
}

int run_verify_sparse(const Options &o, Report &out) {
  const auto r = verify_theorem4_charges(o.k, o.t);
  out.field("k", r.k);
  out.field("t", r.t);
  out.field("threshold", to_string(r.c_threshold));
  out.field("low_root", to_string(r.low_root));
  out.field("high_root", to_string(r.high_root));
  for (const auto &c : r.checks) {
    if (out.machine())
      out.field("check." + c.name, c.pass ? "PASS" : "FAIL");
    else
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail
                << '\n';
  }
  bool ok = r.all_pass();
  if (!o.graph.empty()) {
    const auto mad = mad_exact(io::parse_graph_file(o.graph)).value;
    out.field("graph_mad", to_string(mad));
    out.field("below_threshold", mad < r.c_threshold ? "true" : "false");
    ok = ok && mad < r.c_threshold;
  }
  out.field("verdict", ok ? "PASS" : "FAIL");
  return ok ? kOk : kNegative;
}

int run_find_reducible(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  const auto r = find_reducible_edges(g, params(o));
  out.field("count", r.edges.size());
  for (const auto &e : r.edges) {
    std::ostringstream os;
    os << e.u << ' ' << e.v << " degree_sum=" << e.degree_sum
       << " common=" << e.common;
    out.field("edge", os.str());
  }
  return kOk;
}

int run_kernel(const Options &o, Report &out) {
  const auto g = io::parse_graph_file(o.graph);
  const auto r = greedy_kernel(g, {o.k, o.k});
  out.field("kernel_size", r.kernel_vertices.size());
  out.field("kernel", join(r.kernel_vertices));
  out.field("removal_order", join(r.removal_order));
  return kOk;
}

int run_audit(const Options &o, Report &out) {
  const auto report = audit::full_audit();
  for (const auto &rec : report.records) {
    if (out.machine())
      out.field("row", audit::format_row(rec));
    else
      std::cout << audit::format_row(rec) << '\n';
  }
  out.field("tuples", report.records.size());
  out.field("failing", report.failing);
  bool ok = report.pass();
  if (!o.golden.empty()) {
    std::ifstream in(o.golden);
    if (!in)
      throw UsageError("cannot open golden file " + o.golden);
    const auto diff = audit::diff_against_golden(report, audit::parse_golden(in));
    out.field("golden_diff_lines", diff.lines.size());
    for (const auto &l : diff.lines)
      out.field("diff", l);
    ok = ok && diff.empty();
  }
  out.field("verdict", ok ? "PASS" : "FAIL");
  return ok ? kOk : kNegative;
}

int run_suite(const Options &o, Report &out) {
  const auto r = run_prop31_suite(o.seed, o.count, o.max_n, 3, o.t_min, o.t_max);
  out.field("seed", o.seed);
  out.field("attempts", r.attempts);
  out.field("hypothesis_met", r.hypothesis_met);
  out.field("passes", r.passes);
  out.field("critical_faults", r.critical_faults);
  out.field("skipped", r.skipped);
  const bool ok = r.critical_faults == 0 && r.hypothesis_met == o.count;
  out.field("verdict", ok ? "PASS" : "FAIL");
  return ok ? kOk : kNegative;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"List coloring with union separation: solver, choosability, "
               "constructions and audits."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));

  auto add_k = [&](CLI::App *sub, bool with_t) {
    sub->add_option("--k", o.k, "Minimum list size")->required();
    if (with_t)
      sub->add_option("--t", o.t, "Separation parameter")->required();
  };
  auto add_universe = [&](CLI::App *sub) {
    sub->add_option("--universe", o.universe, "Override the color universe");
  };

  auto *solve_cmd = app.add_subcommand("solve", "Find an L-coloring");
  solve_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("lists", o.lists)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--emit-witness", o.emit, "Write the coloring here");
  add_universe(solve_cmd);

  auto *choose_cmd =
      app.add_subcommand("check-choosable", "Decide (k,t)-choosability");
  choose_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  add_k(choose_cmd, true);
  choose_cmd->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);
  choose_cmd->add_option("--max-seconds", o.max_seconds)->check(CLI::PositiveNumber);
  choose_cmd->add_option("--emit-witness", o.emit, "Write the witness lists here");

  auto *verify_cmd = app.add_subcommand(
      "verify-witness", "Check that lists are a valid uncolorable assignment");
  verify_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("lists", o.lists)->required()->check(CLI::ExistingFile);
  add_k(verify_cmd, true);
  add_universe(verify_cmd);

  auto *construct_cmd =
      app.add_subcommand("construct", "Emit a non-choosable instance");
  construct_cmd->add_option("family", o.family, "book or gadget35")
      ->required()
      ->check(CLI::IsMember({"book", "gadget35"}));
  construct_cmd->add_option("--k", o.k);
  construct_cmd->add_option("--t", o.t);
  construct_cmd->add_option("--graph-out", o.graph_out);
  construct_cmd->add_option("--lists-out", o.lists_out);

  auto *mad_cmd = app.add_subcommand("mad", "Exact maximum average degree");
  mad_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);

  auto *sparse_cmd =
      app.add_subcommand("verify-sparse", "Audit the charge algebra for (k,t)");
  add_k(sparse_cmd, true);
  sparse_cmd->add_option("graph", o.graph, "Optional graph to test against "
                                           "the Mad threshold")
      ->check(CLI::ExistingFile);

  auto *reducible_cmd =
      app.add_subcommand("find-reducible", "List degree-sum reducible edges");
  reducible_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  add_k(reducible_cmd, true);

  auto *kernel_cmd = app.add_subcommand("kernel", "Peel vertices of degree < k");
  kernel_cmd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  add_k(kernel_cmd, false);

  auto *audit_cmd = app.add_subcommand("audit-tuples", "Discharging tuple audit");
  audit_cmd->add_option("--golden", o.golden, "Reference table to diff against")
      ->check(CLI::ExistingFile);

  auto *suite_cmd =
      app.add_subcommand("prop31-suite", "Random reducibility property suite");
  suite_cmd->add_option("--seed", o.seed);
  suite_cmd->add_option("--count", o.count)->check(CLI::PositiveNumber);
  suite_cmd->add_option("--max-n", o.max_n)->check(CLI::Range(2, 12));
  suite_cmd->add_option("--t-min", o.t_min);
  suite_cmd->add_option("--t-max", o.t_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  Report out(o.format == "machine");
  try {
    if (*solve_cmd)
      return run_solve(o, out);
    if (*choose_cmd)
      return run_check_choosable(o, out);
    if (*verify_cmd)
      return run_verify_witness(o, out);
    if (*construct_cmd)
      return run_construct(o, out);
    if (*mad_cmd)
      return run_mad(o, out);
    if (*sparse_cmd)
      return run_verify_sparse(o, out);
    if (*reducible_cmd)
      return run_find_reducible(o, out);
    if (*kernel_cmd)
      return run_kernel(o, out);
    if (*audit_cmd)
      return run_audit(o, out);
    if (*suite_cmd)
      return run_suite(o, out);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
