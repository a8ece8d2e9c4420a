// End-to-end checks of the published results, one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <idcode/cycle_codes.hpp>
#include <idcode/extremal.hpp>
#include <idcode/semantics.hpp>
#include <idcode/simulator.hpp>
#include <idcode/solver.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "support.hpp"

using namespace idcode;
using cycle::Family;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& what) {
    pass = false;
    if (failures++ < 8) detail << "\n    " << what;
  }
};

struct Solved {
  std::size_t optimum = 0;
  std::vector<Code> optima;
};

// Oracle runs shared by several criteria, keyed by (family, r, n).
std::map<std::tuple<Family, Radius, std::size_t>, Solved> g_solved;

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

const Solved& solve_cycle(Family f, Radius r, std::size_t n) {
  const auto key = std::make_tuple(f, r, n);
  auto it = g_solved.find(key);
  if (it != g_solved.end()) return it->second;
  SolveOptions opts;
  // Window pruning assumes the properties checked below, so stay unpruned.
  opts.use_cycle_pruning = false;
  opts.enumerate_all = true;
  opts.parallelism = workers();
  const auto res = min_code(build_cycle(n), cycle::family_spec(f, r), opts);
  Solved s;
  if (res.optimum) s.optimum = *res.optimum;
  s.optima = res.all_optima;
  return g_solved.emplace(key, std::move(s)).first->second;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t block_of(Family f, Radius r) {
  switch (f) {
    case Family::kWeak:
      return 2 * r + 2;
    case Family::kLight:
      return 3 * r + 2;
    case Family::kTwoRadii:
      return static_cast<std::size_t>(oracle::two_radii_block(static_cast<int>(r)));
  }
  return 0;
}

std::size_t counting_bound(Family f, std::size_t n, Radius r) {
  switch (f) {
    case Family::kWeak:
      return ceil_div(n, r + 1);
    case Family::kLight:
      return ceil_div(2 * n, 3 * r + 2);
    case Family::kTwoRadii:
      return ceil_div(2 * n, block_of(f, r));
  }
  return 0;
}

std::size_t first_n(Family f, Radius r) { return f == Family::kTwoRadii ? block_of(f, r) : 3; }

void oracle_vs_formula(Family f, Outcome& out) {
  int rows = 0;
  for (Radius r = 1; r <= 3; ++r) {
    for (std::size_t n = first_n(f, r); n <= 18; ++n) {
      ++rows;
      const auto& s = solve_cycle(f, r, n);
      const std::size_t formula = cycle::formula_size(f, n, r);
      if (s.optimum != formula) {
        out.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": oracle " +
                 std::to_string(s.optimum) + ", formula " + std::to_string(formula));
      }
    }
  }
  out.detail << " (" << rows << " rows)";
}

void construction(Outcome& out) {
  int checked = 0;
  for (Family f : {Family::kWeak, Family::kLight, Family::kTwoRadii}) {
    for (Radius r = 1; r <= 6; ++r) {
      for (std::size_t n = 3; n <= 200; ++n) {
        if (!cycle::in_regime(f, n, r)) continue;
        ++checked;
        const std::string tag =
            cycle::to_string(f) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
        try {
          const Code code = cycle::construct_code(f, n, r);
          const auto rep = check_code(build_cycle(n), code, cycle::family_spec(f, r));
          if (!rep.valid) out.fail(tag + ": construction invalid");
          if (code.size() != cycle::formula_size(f, n, r)) out.fail(tag + ": size differs from formula");
        } catch (const cycle::ConstructionFailed& e) {
          out.fail(tag + ": " + e.what());
        }
      }
    }
  }
  out.detail << " (" << checked << " instances, " << out.failures << " failing)";
}

void figures(Outcome& out) {
  auto radii_of = [](const VerificationReport& rep) {
    std::vector<RadiusSet> v;
    if (rep.certificate) v = rep.certificate->per_vertex;
    return v;
  };
  auto singles = [](std::initializer_list<Radius> rs) {
    std::vector<RadiusSet> v;
    for (Radius r : rs) v.push_back({r});
    return v;
  };

  const Graph p5 = build_path(5);
  {
    const Code c{2, 3};
    const auto weak = check_code(p5, c, FamilySpec::weak(2));
    if (!weak.valid) out.fail("path {v3,v4}: not weak");
    if (radii_of(weak) != singles({2, 1, 0, 0, 1})) out.fail("path {v3,v4}: radii differ");
    if (check_code(p5, c, FamilySpec::identifying(2)).valid) out.fail("path {v3,v4}: identifying");
  }
  {
    const Code c{0, 4};
    const auto light = check_code(p5, c, FamilySpec::light(2));
    if (!light.valid) out.fail("path {v1,v5}: not light");
    if (check_code(p5, c, FamilySpec::weak(2)).valid) out.fail("path {v1,v5}: weak");
    // v1 and v2 are separated at radius 0 only.
    if (!light.certificate || light.certificate->per_pair->at(0, 1) != 0) out.fail("path {v1,v5}: pair radius");
    for (Radius t = 1; t <= 2; ++t)
      if (separates(DistanceMatrix(p5), c, 0, 1, t)) out.fail("path {v1,v5}: v1/v2 separated above 0");
  }
  struct CycleFigure {
    const char* name;
    std::size_t n;
    Radius r;
    Code code;
    std::vector<RadiusSet> radii;
  };
  const std::vector<CycleFigure> cycles{
      {"C_12 weak 2", 12, 2, {2, 3, 8, 9}, singles({2, 1, 0, 0, 1, 2, 2, 1, 0, 0, 1, 2})},
      {"C_13 weak 2", 13, 2, {2, 3, 8, 9, 12}, singles({2, 1, 0, 0, 1, 2, 2, 1, 0, 0, 1, 2, 0})},
      {"C_10 weak 1", 10, 1, {0, 2, 4, 6, 8}, singles({0, 1, 0, 1, 0, 1, 0, 1, 0, 1})},
      {"C_8 weak 2", 8, 2, {0, 2, 6}, singles({0, 1, 0, 2, 2, 2, 0, 1})},
  };
  for (const auto& fig : cycles) {
    const Graph g = build_cycle(fig.n);
    const auto rep = check_code(g, fig.code, FamilySpec::weak(fig.r));
    if (!rep.valid) out.fail(std::string(fig.name) + ": invalid");
    if (radii_of(rep) != fig.radii) out.fail(std::string(fig.name) + ": radii differ");
    const auto best = min_code(g, FamilySpec::weak(fig.r));
    if (best.optimum != fig.code.size()) out.fail(std::string(fig.name) + ": not optimum");
  }
  out.detail << " (6 figures)";
}

void extremal(Outcome& out) {
  for (Radius r = 1; r <= 4; ++r) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto inst = build_extremal(r, k);
      const std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k);
      const std::size_t expect = k + r * ((std::size_t{1} << k) - 2);
      if (inst.graph.order() != expect) out.fail(tag + ": order");
      const auto rep = check_code(inst.graph, inst.code, FamilySpec::weak(r));
      if (!rep.valid) {
        out.fail(tag + ": clique is not a weak code");
        continue;
      }
      for (std::size_t j = 1; j <= inst.layers.size(); ++j)
        for (const auto& lv : inst.layers[j - 1])
          if (rep.certificate->per_vertex[lv.vertex] != RadiusSet{static_cast<Radius>(j)})
            out.fail(tag + ": layer " + std::to_string(j) + " radius");
    }
  }

  // Every connected graph on five labeled vertices, weak 1-codes of size <= 2.
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) slots.emplace_back(a, b);
  int connected = 0;
  int admits = 0;
  for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
    Graph g(5);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) g.add_edge(static_cast<Vertex>(slots[i].first), static_cast<Vertex>(slots[i].second));
    if (!is_connected(g)) continue;
    ++connected;
    SolveOptions opts;
    opts.max_size = 2;
    if (min_code(g, FamilySpec::weak(1), opts).status != SolveStatus::kAboveCap) ++admits;
  }
  if (connected != 728) out.fail("expected 728 connected graphs, saw " + std::to_string(connected));
  if (admits != 0) out.fail(std::to_string(admits) + " five-vertex graphs admit a weak 1-code of size 2");
  out.detail << " (16 instances, " << connected << " five-vertex graphs)";
}

void radius_sets(Outcome& out) {
  std::size_t codes = 0;
  std::size_t largest = 0;
  for (Radius r = 1; r <= 3; ++r) {
    for (std::size_t n = 2 * r + 2; n <= 18; ++n) {
      const DistanceMatrix dm(build_cycle(n));
      for (const auto& code : solve_cycle(Family::kLight, r, n).optima) {
        ++codes;
        for (Vertex x = 0; x < n; ++x) {
          const auto rs = min_radius_set(dm, code, r, x);
          if (!rs) {
            out.fail("optimal light code without a radius set");
            continue;
          }
          largest = std::max(largest, rs->size());
          if (rs->size() > 3) out.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": set of size " +
                                       std::to_string(rs->size()));
        }
      }
    }
  }
  out.detail << " (" << codes << " optimal codes, largest set " << largest << ")";
}

void simulator(Outcome& out) {
  std::mt19937 rng(20260101);
  int weak_valid = 0;
  int light_valid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = to_graph(oracle::random_connected(rng, n, 0.25));
    const DistanceMatrix dm(g);
    const Code code = random_code(rng, n);
    const Radius r = static_cast<Radius>(rng() % 4);
    RadiusSet upto;
    for (Radius i = 0; i <= r; ++i) upto.push_back(i);
    const bool dom = is_dominating(dm, code, upto).valid;
    const bool memoryless = sim::detection_universal(dm, code, r, sim::Mode::kMemoryless).located_all;
    const bool memory = sim::detection_universal(dm, code, r, sim::Mode::kWithMemory).located_all;
    const bool weak = check_code(dm, code, FamilySpec::weak(r)).valid;
    const bool light = check_code(dm, code, FamilySpec::light(r)).valid;
    if ((memoryless && dom) != weak) out.fail("memoryless mismatch on trial " + std::to_string(trial));
    if ((memory && dom) != light) out.fail("with-memory mismatch on trial " + std::to_string(trial));
    weak_valid += weak;
    light_valid += light;
  }
  out.detail << " (200 graphs, " << weak_valid << " weak, " << light_valid << " light)";
}

void lower_bounds(Outcome& out) {
  std::size_t instances = 0;
  std::size_t codes = 0;
  for (const auto& [key, s] : g_solved) {
    const auto [f, r, n] = key;
    ++instances;
    const std::string tag = cycle::to_string(f) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
    if (s.optimum < counting_bound(f, n, r)) out.fail(tag + ": optimum below counting bound");
    const std::size_t block = block_of(f, r);
    for (const auto& code : s.optima) {
      ++codes;
      if (n >= block && cycle::min_window_count(n, code, block) < 2) out.fail(tag + ": sparse window");
      if (f != Family::kLight) continue;
      // Each code vertex has a partner within r + 1.
      for (Vertex c : code) {
        bool near = false;
        for (Vertex d : code) {
          const std::size_t gap = c > d ? c - d : d - c;
          if (d != c && std::min(gap, n - gap) <= r + 1) near = true;
        }
        if (!near) out.fail(tag + ": isolated code vertex");
      }
    }
  }
  out.detail << " (" << instances << " instances, " << codes << " optimal codes)";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "weak codes on cycles: oracle = closed form", [](Outcome& o) { oracle_vs_formula(Family::kWeak, o); }},
      {2, "light codes on cycles: oracle = closed form", [](Outcome& o) { oracle_vs_formula(Family::kLight, o); }},
      {3, "two-radii codes on cycles: oracle = closed form", [](Outcome& o) { oracle_vs_formula(Family::kTwoRadii, o); }},
      {4, "constructions valid with closed-form size, r<=6, n<=200", construction},
      {5, "figure codes: verdicts and radii", figures},
      {6, "extremal graphs and five-vertex enumeration", extremal},
      {7, "optimal light codes need at most three radii", radius_sets},
      {8, "round protocol equivalent to weak/light definitions", simulator},
      {9, "counting bounds and window properties on optimal codes", lower_bounds},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    failed += !o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << o.detail.str()
              << "  [" << std::fixed << std::setprecision(2) << dt.count() << "s]" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failed;
}
