#include "idcode/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "idcode/cycle_codes.hpp"
#include "idcode/extremal.hpp"
#include "idcode/report_json.hpp"
#include "idcode/semantics.hpp"
#include "idcode/simulator.hpp"
#include "idcode/solver.hpp"

namespace idcode::cli {

namespace {

constexpr const char* kSynopsis =
    "usage: idcode <verify|construct|solve|table|simulate|extremal> [--graph SPEC] "
    "[--family identifying|weak|light|general|two-radii] [-r R] [-p P] [--radii LIST] "
    "[--code LIST] [--n RANGE] [--oracle] [--fault V|none] [--memory] [--include-no-fault] "
    "[--json] [--offset K]";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned parse_unsigned(std::string_view token) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw UsageError("not a nonnegative integer: '" + std::string(token) + "'");
  }
  return value;
}

struct Options {
  std::string graph;
  std::string family;
  std::string r_text;
  unsigned p = 0;
  std::string radii;
  std::string code;
  std::string n_range;
  bool oracle = false;
  std::string fault;
  bool memory = false;
  bool include_no_fault = false;
  bool json = false;
  unsigned offset = 0;
  unsigned k = 0;
  bool all = false;
  bool no_pruning = false;
  unsigned threads = 1;
  std::optional<unsigned> max_size;
};

Radius single_radius(const Options& o) {
  if (o.r_text.empty()) throw UsageError("missing -r");
  return parse_unsigned(o.r_text);
}

std::string join(const std::vector<Vertex>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string braces(const std::vector<Vertex>& v) { return "{" + join(v) + "}"; }

FamilySpec family_from(const Options& o) {
  const std::string& f = o.family;
  if (f.empty()) throw UsageError("missing --family");
  if (f == "general") {
    if (o.p == 0) throw UsageError("--family general needs -p P >= 1");
    std::vector<unsigned> radii;
    if (!o.radii.empty()) {
      radii = parse_index_list(o.radii);
    } else {
      const Radius r = single_radius(o);
      for (Radius i = 0; i <= r; ++i) radii.push_back(i);
    }
    if (radii.empty()) throw UsageError("empty radius list");
    return FamilySpec::general(o.p, radii);
  }
  const Radius r = single_radius(o);
  if (f == "identifying") return FamilySpec::identifying(r);
  if (f == "weak") return FamilySpec::weak(r);
  if (f == "light") return FamilySpec::light(r);
  if (f == "two-radii") return cycle::family_spec(cycle::Family::kTwoRadii, r);
  throw UsageError("unknown family '" + f + "'");
}

cycle::Family cycle_family_from(const Options& o) {
  if (o.family == "weak") return cycle::Family::kWeak;
  if (o.family == "light") return cycle::Family::kLight;
  if (o.family == "two-radii" || (o.family == "general" && o.p == 2 && o.radii.empty())) {
    return cycle::Family::kTwoRadii;
  }
  throw UsageError("cycle constructions exist for weak, light and two-radii (general -p 2) only");
}

Graph graph_from(const Options& o) {
  if (o.graph.empty()) throw UsageError("missing --graph");
  return load_graph_spec(o.graph);
}

Code code_from(const Options& o) {
  if (o.code.empty()) throw UsageError("missing --code");
  auto list = parse_index_list(o.code);
  return Code(list.begin(), list.end());
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "witness: " << to_string(w.kind) << " vertices=" << join(w.vertices)
      << " radii_tried=" << braces(w.radii_tried) << '\n';
  for (const auto& [y, radii] : w.blocking) {
    out << "  opponent " << y << " separated only at radii " << braces(radii) << '\n';
  }
}

void print_certificate(std::ostream& out, const RadiusCertificate& cert) {
  out << "certificate:\n";
  for (std::size_t x = 0; x < cert.per_vertex.size(); ++x) {
    out << "  " << x << ": " << braces(cert.per_vertex[x]) << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = graph_from(o);
  const FamilySpec spec = family_from(o);
  const Code code = code_from(o);
  const auto report = check_code(g, code, spec);
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "graph: " << g.label() << " (n=" << g.order() << ")\n"
        << "family: " << spec.describe() << '\n'
        << "code: " << join(code) << '\n'
        << "valid: " << (report.valid ? "yes" : "no") << '\n';
    if (report.certificate) print_certificate(out, *report.certificate);
    if (report.witness) print_witness(out, *report.witness);
  }
  return report.valid ? kOk : kNegative;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Graph g = graph_from(o);
  const std::size_t n = cycle_order(g);
  if (n == 0) throw UsageError("construct needs --graph cycle:N");
  const auto family = cycle_family_from(o);
  const Radius r = single_radius(o);
  const std::size_t expected = cycle::formula_size(family, n, r);
  Code code;
  std::optional<std::string> failure;
  std::optional<Witness> witness;
  try {
    code = cycle::construct_code(family, n, r, o.offset);
  } catch (const cycle::ConstructionFailed& e) {
    failure = e.what();
    witness = e.witness();
  }
  if (o.json) {
    nlohmann::json j{{"graph", g.label()},
                     {"family", to_json(cycle::family_spec(family, r))},
                     {"formula", expected},
                     {"valid", !failure}};
    if (failure) {
      j["error"] = *failure;
      j["witness"] = witness ? to_json(*witness) : nlohmann::json(nullptr);
    } else {
      j["code"] = code;
      j["size"] = code.size();
    }
    out << j.dump(2) << '\n';
  } else if (failure) {
    out << "self-check: FAILED: " << *failure << '\n';
    if (witness) print_witness(out, *witness);
  } else {
    out << join(code) << '\n'
        << "self-check: valid " << cycle::family_spec(family, r).describe() << " on " << g.label()
        << ", size " << code.size() << " = formula " << expected << '\n';
  }
  return failure ? kNegative : kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = graph_from(o);
  const FamilySpec spec = family_from(o);
  SolveOptions opts;
  opts.use_cycle_pruning = !o.no_pruning;
  opts.enumerate_all = o.all;
  opts.parallelism = o.threads;
  if (o.max_size) opts.max_size = *o.max_size;
  const auto result = min_code(g, spec, opts);
  if (o.json) {
    out << to_json(result).dump(2) << '\n';
  } else {
    out << "graph: " << g.label() << " (n=" << g.order() << ")\n"
        << "family: " << spec.describe() << '\n';
    switch (result.status) {
      case SolveStatus::kOptimal:
        out << "optimum: " << *result.optimum << '\n' << "witness: " << join(result.witness_code) << '\n';
        break;
      case SolveStatus::kInfeasible:
        out << "optimum: INFEASIBLE\n";
        break;
      case SolveStatus::kAboveCap:
        out << "optimum: above cap " << *o.max_size << '\n';
        break;
    }
    for (const auto& c : result.all_optima) out << "optimal: " << join(c) << '\n';
    out << "examined: " << result.stats.examined << "\npruned: " << result.stats.pruned << '\n';
  }
  return result.status == SolveStatus::kOptimal ? kOk : kNegative;
}

std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_table(const Options& o, std::ostream& out) {
  const auto family = cycle_family_from(o);
  if (o.r_text.empty()) throw UsageError("missing -r");
  if (o.n_range.empty()) throw UsageError("missing --n RANGE");
  const auto [r_lo, r_hi] = parse_range(o.r_text);
  const auto [n_lo, n_hi] = parse_range(o.n_range);
  SolveOptions opts;
  opts.use_cycle_pruning = !o.no_pruning;
  opts.parallelism = o.threads;
  const auto rows = verify_theorem_table(family, r_lo, r_hi, n_lo, n_hi, o.oracle, opts);
  const bool all_agree = std::all_of(rows.begin(), rows.end(), [](const TheoremRow& t) { return t.agree; });
  if (o.json) {
    nlohmann::json j{{"family", cycle::to_string(family)}, {"oracle", o.oracle}, {"all_agree", all_agree}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) j["rows"].push_back(to_json(row));
    out << j.dump(2) << '\n';
  } else {
    out << "family: " << cycle::to_string(family) << '\n';
    out << std::setw(4) << "r" << std::setw(6) << "n" << std::setw(9) << "formula" << std::setw(7)
        << "bound" << std::setw(11) << "construct";
    if (o.oracle) out << std::setw(8) << "oracle";
    out << std::setw(7) << "agree" << '\n';
    for (const auto& row : rows) {
      out << std::setw(4) << row.r << std::setw(6) << row.n << std::setw(9) << cell(row.formula)
          << std::setw(7) << cell(row.lower_bound) << std::setw(11) << cell(row.constructed);
      if (o.oracle) out << std::setw(8) << cell(row.oracle);
      out << std::setw(7) << (row.formula ? (row.agree ? "yes" : "NO") : "n/a") << '\n';
    }
    out << (all_agree ? "all rows agree" : "DISAGREEMENT") << '\n';
  }
  return all_agree ? kOk : kNegative;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Graph g = graph_from(o);
  const Code code = code_from(o);
  const Radius r = single_radius(o);
  const DistanceMatrix dm(g);
  const auto mode = o.memory ? sim::Mode::kWithMemory : sim::Mode::kMemoryless;
  const auto opponents =
      o.include_no_fault ? sim::Opponents::kFaultsAndNoFault : sim::Opponents::kFaultsOnly;

  if (o.fault.empty()) {
    const auto result = sim::detection_universal(dm, code, r, mode, opponents);
    if (o.json) {
      nlohmann::json j{{"mode", sim::to_string(mode)}, {"located_all", result.located_all}};
      j["first_failure"] = result.first_failure ? nlohmann::json(*result.first_failure->fault)
                                                : nlohmann::json(nullptr);
      out << j.dump(2) << '\n';
    } else {
      out << "mode: " << sim::to_string(mode) << '\n';
      if (result.located_all) {
        out << "verdict: every single fault located within " << r << " rounds\n";
      } else {
        out << "verdict: fault at " << *result.first_failure->fault << " not located\n";
      }
    }
    return result.located_all ? kOk : kNegative;
  }

  const sim::Scenario sc =
      o.fault == "none" ? sim::Scenario::none() : sim::Scenario::at(parse_unsigned(o.fault));
  if (sc.fault && *sc.fault >= g.order()) throw UsageError("--fault out of range");
  const auto outcome = sim::run_detection(dm, code, r, sc, mode, opponents);
  if (o.json) {
    out << to_json(outcome).dump(2) << '\n';
  } else {
    out << "fault: " << (sc.fault ? std::to_string(*sc.fault) : "none") << '\n'
        << "mode: " << sim::to_string(mode) << '\n';
    for (std::size_t i = 0; i < outcome.history.rounds.size(); ++i) {
      out << i << ": alarms=" << braces(outcome.history.rounds[i]) << '\n';
    }
    if (outcome.located_at_round) {
      out << "verdict: located at round " << *outcome.located_at_round << '\n';
    } else {
      out << "verdict: not located\n";
    }
  }
  return outcome.located_at_round ? kOk : kNegative;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const Radius r = single_radius(o);
  if (o.k == 0) throw UsageError("missing -k K (k >= 1)");
  if (r == 0) throw UsageError("-r must be at least 1");
  const auto inst = build_extremal(r, o.k);
  const auto report = check_code(inst.graph, inst.code, FamilySpec::weak(r));
  if (o.json) {
    auto j = to_json(inst);
    j["w_max"] = w_max(r, o.k);
    j["report"] = to_json(report);
    out << j.dump(2) << '\n';
  } else {
    out << serialize_extremal(inst);
    out << "order: " << inst.graph.order() << " = w_max(" << r << "," << o.k << ") = " << w_max(r, o.k)
        << '\n';
    out << "verdict: clique " << braces(inst.code) << " is " << (report.valid ? "" : "NOT ")
        << "a weak " << r << "-code\n";
    if (report.witness) print_witness(out, *report.witness);
  }
  return report.valid ? kOk : kNegative;
}

}  // namespace

std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_unsigned(item));
    } else {
      const unsigned lo = parse_unsigned(item.substr(0, dots));
      const unsigned hi = parse_unsigned(item.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range '" + std::string(item) + "'");
      for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned v = parse_unsigned(text);
    return {v, v};
  }
  const unsigned lo = parse_unsigned(std::string_view(text).substr(0, dots));
  const unsigned hi = parse_unsigned(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identifying, weak, light and (p,R)-identifying codes on graphs", "idcode"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "cycle:N, path:N or an edge-list file");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "identifying|weak|light|general|two-radii");
    sub->add_option("-r", o.r_text, "maximum radius");
    sub->add_option("-p", o.p, "radii per vertex (general)");
    sub->add_option("--radii", o.radii, "allowed radii, e.g. 0..3 or 0,2 (general)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "structured output"); };

  auto* verify = app.add_subcommand("verify", "check a code against a family");
  add_graph(verify);
  add_family(verify);
  verify->add_option("--code", o.code, "comma-separated vertices, ranges a..b");
  add_json(verify);

  auto* construct = app.add_subcommand("construct", "optimal code on a cycle");
  add_graph(construct);
  add_family(construct);
  construct->add_option("--offset", o.offset, "rotate the code by K");
  add_json(construct);

  auto* solve = app.add_subcommand("solve", "exhaustive minimum code");
  add_graph(solve);
  add_family(solve);
  solve->add_flag("--all", o.all, "list every optimal code");
  solve->add_flag("--no-pruning", o.no_pruning, "disable cycle window pruning");
  solve->add_option("--threads", o.threads, "worker threads");
  solve->add_option("--max-size", o.max_size, "cardinality cap");
  add_json(solve);

  auto* table = app.add_subcommand("table", "closed form vs construction vs oracle on cycles");
  add_family(table);
  table->add_option("--n", o.n_range, "cycle orders, a..b");
  table->add_flag("--oracle", o.oracle, "run the exhaustive oracle");
  table->add_flag("--no-pruning", o.no_pruning, "disable cycle window pruning in the oracle");
  table->add_option("--threads", o.threads, "worker threads");
  add_json(table);

  auto* simulate = app.add_subcommand("simulate", "fault location by rounds");
  add_graph(simulate);
  simulate->add_option("-r", o.r_text, "number of rounds minus one");
  simulate->add_option("--code", o.code, "monitoring vertices");
  simulate->add_option("--fault", o.fault, "faulty vertex or 'none'; omit to sweep all faults");
  simulate->add_flag("--memory", o.memory, "supervisor remembers earlier rounds");
  simulate->add_flag("--include-no-fault", o.include_no_fault,
                     "also distinguish the fault-free scenario");
  add_json(simulate);

  auto* extremal = app.add_subcommand("extremal", "largest graph with a weak r-code of size k");
  extremal->add_option("-r", o.r_text, "radius");
  extremal->add_option("-k", o.k, "code size");
  add_json(extremal);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "idcode: " << e.what() << '\n' << kSynopsis << '\n';
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (extremal->parsed()) return cmd_extremal(o, out);
  } catch (const ResourceError& e) {
    err << "idcode: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "idcode: graph file " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "idcode: " << e.what() << '\n' << kSynopsis << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "idcode: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "idcode: " << e.what() << '\n' << kSynopsis << '\n';
    return kUsage;
  }
  err << kSynopsis << '\n';
  return kUsage;
}

}  // namespace idcode::cli
