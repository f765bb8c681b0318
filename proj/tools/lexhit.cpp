// Command-line front end: parse hypergraph files, enumerate minimal hitting
// sets in lexicographic order, answer extension queries, emit reduction
// instances, verify against the brute-force oracles, and benchmark.
//
// Exit codes: 0 success (or verdict `true`), 1 negative verdict (`false`
// extension, or no transversal where one was requested), 2 usage, parse, or
// cap errors.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexhit/check.hpp"
#include "lexhit/circuit.hpp"
#include "lexhit/enumerate.hpp"
#include "lexhit/extension.hpp"
#include "lexhit/hypergraph.hpp"
#include "lexhit/independent_family.hpp"
#include "lexhit/reference.hpp"

namespace {

using namespace lexhit;
using Clock = std::chrono::steady_clock;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

double to_us(Clock::duration d) {
  return std::chrono::duration<double, std::micro>(d).count();
}

struct DelaySummary {
  double min_us = 0, median_us = 0, max_us = 0;
};

DelaySummary summarize(std::vector<double> delays) {
  DelaySummary s;
  if (delays.empty()) return s;
  std::sort(delays.begin(), delays.end());
  s.min_us = delays.front();
  s.max_us = delays.back();
  s.median_us = delays[delays.size() / 2];
  return s;
}

void print_instance_line(std::ostream& out, const Hypergraph& h) {
  out << "instance: n=" << h.vertex_count() << " m=" << h.edge_count()
      << " rank=" << h.rank() << '\n';
}

// Instance summary plus the instrumented counters of one run. The output
// count is the full transversal count only when the run was complete.
struct RunReport {
  std::size_t n = 0, m = 0, rank = 0;
  EnumerationStats stats;
  DelaySummary delays;

  static RunReport of(const Hypergraph& h, const EnumerationStats& stats,
                      std::vector<double> delays_us) {
    RunReport r;
    r.n = h.vertex_count();
    r.m = h.edge_count();
    r.rank = h.rank();
    r.stats = stats;
    r.delays = summarize(std::move(delays_us));
    return r;
  }

  void print(std::ostream& out) const {
    out << "instance: n=" << n << " m=" << m << " rank=" << rank << '\n';
    out << "outputs: " << stats.outputs << '\n';
    out << "complete: " << (stats.complete ? "yes" : "no") << '\n';
    out << "k_star: " << stats.observed_kstar << '\n';
    out << "max_node_delay: " << stats.max_nodes_between_outputs << '\n';
    out << "node_delay_bound: " << (n == 0 ? 1 : 2 * n - 1) << '\n';
    out << "nodes_visited: " << stats.nodes_visited << '\n';
    out << "oracle_calls: " << stats.oracle_calls << '\n';
    out << "max_oracle_include: " << stats.max_include_size_queried << '\n';
    out << "delay_us: min=" << delays.min_us << " median=" << delays.median_us
        << " max=" << delays.max_us << '\n';
  }
};

Hypergraph load(const std::string& path) { return parse_hypergraph_file(path); }

VertexSet names_to_set(const Hypergraph& h, const std::vector<std::string>& names) {
  VertexSet s(h.vertex_count());
  for (const auto& name : names) {
    const auto v = h.vertex_named(name);
    if (!v) throw std::invalid_argument("unknown vertex name '" + name + "'");
    s.insert(*v);
  }
  return s;
}

std::string solution_line(const Hypergraph& h, const VertexSet& s) {
  std::string line;
  s.for_each([&](VertexId v) {
    if (!line.empty()) line += ' ';
    line += h.name(v);
  });
  return line;
}

std::size_t bf_cap_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("LEXHIT_BF_MAX_N")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(parsed);
    std::cerr << "warning: ignoring malformed LEXHIT_BF_MAX_N='" << env << "'\n";
  }
  return fallback;
}

struct EnumerateArgs {
  std::string file;
  std::uint64_t limit = 0;
  bool limited = false;
  bool json = false;
  bool stats = false;
  bool minimize = false;
};

int run_enumerate(const EnumerateArgs& args) {
  Hypergraph h = load(args.file);
  if (args.minimize) h = h.without_superset_edges();
  Enumeration e(h);
  std::vector<double> delays;
  auto last = Clock::now();
  std::uint64_t produced = 0;
  while (!args.limited || produced < args.limit) {
    auto s = e.next();
    if (!s) break;
    delays.push_back(to_us(Clock::now() - last));
    last = Clock::now();
    if (args.json) {
      nlohmann::json record;
      record["index"] = produced;
      record["vertices"] = nlohmann::json::array();
      s->for_each([&](VertexId v) { record["vertices"].push_back(h.name(v)); });
      std::cout << record.dump() << '\n';
    } else {
      std::cout << solution_line(h, *s) << '\n';
    }
    ++produced;
  }
  if (args.stats) RunReport::of(h, e.stats(), delays).print(std::cerr);
  if (produced == 0) std::cerr << "no transversal exists\n";
  return kExitSuccess;
}

int run_extreme(const std::string& file, bool smallest, bool json) {
  const Hypergraph h = load(file);
  const auto s = smallest ? lex_smallest(h) : lex_largest_greedy(h);
  if (!s) {
    std::cerr << "no transversal exists\n";
    return kExitNegative;
  }
  if (json) {
    nlohmann::json record;
    record["vertices"] = nlohmann::json::array();
    s->for_each([&](VertexId v) { record["vertices"].push_back(h.name(v)); });
    std::cout << record.dump() << '\n';
  } else {
    std::cout << solution_line(h, *s) << '\n';
  }
  return kExitSuccess;
}

int run_count(const std::string& file) {
  const Hypergraph h = load(file);
  const auto result = all_minimal_transversals(h);
  std::cout << result.transversals.size() << '\n';
  return kExitSuccess;
}

struct ExtendArgs {
  std::string file;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  bool stats = false;
};

int run_extend(const ExtendArgs& args) {
  const Hypergraph h = load(args.file);
  const ExtensionQuery q(h, names_to_set(h, args.include), names_to_set(h, args.exclude));
  const ExtensionDecision d = extend_decide(q);
  std::cout << (d.extends ? "true" : "false") << '\n';
  if (args.stats) {
    std::cerr << "tuples_examined: " << d.stats.tuples_examined << '\n';
    std::cerr << "system_sizes:";
    for (std::size_t s : d.stats.system_sizes) std::cerr << ' ' << s;
    std::cerr << '\n';
    std::cerr << "forbidden_size: " << d.stats.forbidden_size << '\n';
  }
  return d.extends ? kExitSuccess : kExitNegative;
}

struct ReduceArgs {
  std::string file;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  std::string emit = "mcif";
  bool punctured = false;
};

int run_reduce(const ReduceArgs& args) {
  const Hypergraph h = load(args.file);
  const ExtensionQuery q(h, names_to_set(h, args.include), names_to_set(h, args.exclude));
  const auto mode = args.punctured ? WitnessMode::Punctured : WitnessMode::Unpunctured;
  const MultiColouredInstance mcif = reduce_to_mcif(q, mode);
  if (args.emit == "mcif") {
    write_instance(std::cout, mcif);
  } else if (args.emit == "if") {
    write_instance(std::cout, mcif_to_if(mcif));
  } else if (args.emit == "circuit") {
    write_circuit(std::cout, if_to_circuit(mcif_to_if(mcif)));
  } else {
    throw std::invalid_argument("unknown --emit kind '" + args.emit + "'");
  }
  return kExitSuccess;
}

struct VerifyArgs {
  std::string file;
  std::size_t max_n = 20;
};

int run_verify(const VerifyArgs& args) {
  const Hypergraph h = load(args.file);
  const std::size_t n = h.vertex_count();
  BruteForceOptions opts;
  opts.max_universe = args.max_n;
  print_instance_line(std::cout, h);

  const auto expected = bf_all_minimal_transversals(h, opts);  // throws CapExceeded
  const auto result = all_minimal_transversals(h);
  bool pass = true;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::cout << "check " << name << ": " << (ok ? "ok" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    pass = pass && ok;
  };

  report("transversals-match-bruteforce", result.transversals == expected,
         std::to_string(expected.size()) + " sets");

  bool ascending = true;
  for (std::size_t i = 1; i < result.transversals.size(); ++i)
    ascending = ascending &&
                lex_compare(result.transversals[i - 1], result.transversals[i]) ==
                    std::strong_ordering::less;
  report("lex-strictly-ascending", ascending, "");

  bool bounds_ok = true;
  std::string bounds_msg;
  try {
    result.stats.check_bounds(n);
  } catch (const BoundViolation& e) {
    bounds_ok = false;
    bounds_msg = e.what();
  }
  report("instrumented-bounds", bounds_ok,
         bounds_ok ? "max gap " + std::to_string(result.stats.max_nodes_between_outputs) +
                         " <= " + std::to_string(n == 0 ? 1 : 2 * n - 1) +
                         ", max oracle include " +
                         std::to_string(result.stats.max_include_size_queried) +
                         " <= k*+1 = " + std::to_string(result.stats.observed_kstar + 1)
                   : bounds_msg);

  const auto smallest = lex_smallest(h);
  const auto largest = lex_largest_greedy(h);
  const bool extremes_ok =
      result.transversals.empty()
          ? (!smallest && !largest)
          : (smallest && largest && *smallest == result.transversals.front() &&
             *largest == result.transversals.back());
  report("lex-extremes", extremes_ok, "");

  // Oracle budget bounds are asserted on every extension call; reaching this
  // point means none of the enumeration's calls violated them.
  report("oracle-budgets", true, std::to_string(result.stats.oracle_calls) + " calls");

  std::cout << "verify: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitSuccess : kExitNegative;
}

struct BenchArgs {
  std::string file;
  unsigned repeat = 1;
  bool compare_bf = false;
  std::size_t max_n = 20;
};

int run_bench(const BenchArgs& args) {
  const Hypergraph h = load(args.file);
  std::vector<double> delays;
  EnumerationStats stats;
  Clock::duration total{};
  for (unsigned r = 0; r < args.repeat; ++r) {
    Enumeration e(h);
    auto last = Clock::now();
    const auto start = last;
    while (auto s = e.next()) {
      delays.push_back(to_us(Clock::now() - last));
      last = Clock::now();
    }
    total += Clock::now() - start;
    stats = e.stats();
    stats.check_bounds(h.vertex_count());  // hard assertion on every run
  }
  std::cout << "runs: " << args.repeat << '\n';
  RunReport::of(h, stats, delays).print(std::cout);
  std::cout << "enumerate_ms: " << to_us(total) / 1000.0 / args.repeat << '\n';

  if (args.compare_bf) {
    BruteForceOptions opts;
    opts.max_universe = args.max_n;
    opts.parallel = false;
    auto t0 = Clock::now();
    const auto serial = bf_all_minimal_transversals(h, opts);
    auto t1 = Clock::now();
    opts.parallel = true;
    const auto parallel = bf_all_minimal_transversals(h, opts);
    auto t2 = Clock::now();
    if (serial != parallel) {
      std::cerr << "bruteforce kernels disagree\n";
      return kExitNegative;
    }
    std::cout << "bruteforce_serial_ms: " << to_us(t1 - t0) / 1000.0 << '\n';
    std::cout << "bruteforce_parallel_ms: " << to_us(t2 - t1) / 1000.0 << '\n';
    std::cout << "bruteforce_outputs: " << serial.size() << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lexhit: minimal hitting set enumeration in lexicographic order.\n"
      "Exit codes: 0 success/true, 1 false or no transversal, 2 usage or "
      "parse errors."};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "Stream all minimal hitting sets, lexicographically ascending");
  cmd_enum->add_option("file", enum_args.file, "hypergraph file")->required();
  auto* limit_opt =
      cmd_enum->add_option("--limit", enum_args.limit, "stop after N outputs");
  cmd_enum->add_flag("--json", enum_args.json, "one JSON record per line");
  cmd_enum->add_flag("--stats", enum_args.stats, "run report on stderr");
  cmd_enum->add_flag("--minimize", enum_args.minimize,
                     "drop superset edges before enumerating");

  std::string extreme_file;
  bool extreme_json = false;
  auto* cmd_lexmin = app.add_subcommand(
      "lexmin", "Print the lexicographically smallest minimal hitting set");
  cmd_lexmin->add_option("file", extreme_file, "hypergraph file")->required();
  cmd_lexmin->add_flag("--json", extreme_json, "JSON record");
  auto* cmd_lexmax = app.add_subcommand(
      "lexmax", "Print the lexicographically largest minimal hitting set");
  cmd_lexmax->add_option("file", extreme_file, "hypergraph file")->required();
  cmd_lexmax->add_flag("--json", extreme_json, "JSON record");

  std::string count_file;
  auto* cmd_count = app.add_subcommand("count", "Count all minimal hitting sets");
  cmd_count->add_option("file", count_file, "hypergraph file")->required();

  ExtendArgs extend_args;
  auto* cmd_extend = app.add_subcommand(
      "extend", "Decide whether include extends to a minimal hitting set avoiding exclude");
  cmd_extend->add_option("file", extend_args.file, "hypergraph file")->required();
  cmd_extend->add_option("--include", extend_args.include, "vertices to include")
      ->delimiter(',');
  cmd_extend->add_option("--exclude", extend_args.exclude, "vertices to exclude")
      ->delimiter(',');
  cmd_extend->add_flag("--stats", extend_args.stats, "oracle stats on stderr");

  ReduceArgs reduce_args;
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Emit the query as a multicoloured/single-coloured instance or circuit");
  cmd_reduce->add_option("file", reduce_args.file, "hypergraph file")->required();
  cmd_reduce->add_option("--include", reduce_args.include, "vertices to include")
      ->delimiter(',');
  cmd_reduce->add_option("--exclude", reduce_args.exclude, "vertices to exclude")
      ->delimiter(',');
  cmd_reduce->add_option("--emit", reduce_args.emit, "mcif | if | circuit")
      ->check(CLI::IsMember({"mcif", "if", "circuit"}));
  cmd_reduce->add_flag("--punctured", reduce_args.punctured,
                       "build witness systems from punctured edges");

  VerifyArgs verify_args;
  verify_args.max_n = bf_cap_from_env(20);
  auto* cmd_verify = app.add_subcommand(
      "verify", "Cross-check enumeration against the brute-force oracle");
  cmd_verify->add_option("file", verify_args.file, "hypergraph file")->required();
  cmd_verify->add_option("--max-n", verify_args.max_n,
                         "brute-force cap (env LEXHIT_BF_MAX_N)");

  BenchArgs bench_args;
  bench_args.max_n = bf_cap_from_env(20);
  auto* cmd_bench = app.add_subcommand("bench", "Measure enumeration delays");
  cmd_bench->add_option("file", bench_args.file, "hypergraph file")->required();
  cmd_bench->add_option("--repeat", bench_args.repeat, "full enumerations to run")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_flag("--compare-bf", bench_args.compare_bf,
                      "also time the serial and parallel brute-force kernels");
  cmd_bench->add_option("--max-n", bench_args.max_n,
                        "brute-force cap for --compare-bf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    enum_args.limited = limit_opt->count() > 0;
    if (cmd_enum->parsed()) return run_enumerate(enum_args);
    if (cmd_lexmin->parsed()) return run_extreme(extreme_file, true, extreme_json);
    if (cmd_lexmax->parsed()) return run_extreme(extreme_file, false, extreme_json);
    if (cmd_count->parsed()) return run_count(count_file);
    if (cmd_extend->parsed()) return run_extend(extend_args);
    if (cmd_reduce->parsed()) return run_reduce(reduce_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_bench->parsed()) return run_bench(bench_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
