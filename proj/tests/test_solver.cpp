#include <doctest.h>
#include <idcode/solver.hpp>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace idcode;
using cycle::Family;

namespace {

RadiusSet upto(Radius r) {
  RadiusSet out;
  for (Radius i = 0; i <= r; ++i) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> as_ints(const std::vector<Code>& codes) {
  std::vector<std::vector<int>> out;
  for (const auto& c : codes) out.push_back(to_ints(c));
  return out;
}

}  // namespace

TEST_CASE("documented optima") {
  const auto c10 = min_code(build_cycle(10), FamilySpec::weak(1));
  CHECK(c10.status == SolveStatus::kOptimal);
  CHECK(c10.optimum == 5);

  SolveOptions all;
  all.enumerate_all = true;
  const auto c7 = min_code(build_cycle(7), FamilySpec::light(2), all);
  CHECK(c7.optimum == 2);
  // Two vertices at distance r+1 work, but a closer pair is lexicographically first.
  CHECK(c7.witness_code == Code{0, 2});
  CHECK(std::find(c7.all_optima.begin(), c7.all_optima.end(), Code{0, 3}) != c7.all_optima.end());
  CHECK(c7.all_optima.size() == 14);

  CHECK(min_code(build_cycle(13), FamilySpec::general(2, upto(2))).optimum == 4);

  const auto p5 = min_code(build_path(5), FamilySpec::identifying(2));
  CHECK(p5.optimum == 4);
  CHECK(check_code(build_path(5), p5.witness_code, FamilySpec::identifying(2)).valid);
}

TEST_CASE("twins make identifying codes impossible") {
  const auto r = min_code(build_cycle(3), FamilySpec::identifying(1));
  CHECK(r.status == SolveStatus::kInfeasible);
  CHECK_FALSE(r.optimum);
  CHECK(min_code(build_path(2), FamilySpec::identifying(1)).status == SolveStatus::kInfeasible);
  // Weak codes always exist on connected graphs.
  CHECK(min_code(build_path(2), FamilySpec::weak(1)).optimum == 1);
}

TEST_CASE("limits are explicit") {
  CHECK_THROWS_AS(min_code(build_cycle(65), FamilySpec::weak(1)), ResourceError);
  SolveOptions tiny;
  tiny.subset_budget = 10;
  tiny.use_cycle_pruning = false;
  CHECK_THROWS_AS(min_code(build_cycle(20), FamilySpec::weak(1), tiny), ResourceError);
  SolveOptions big;
  big.max_size = 11;
  CHECK_THROWS_AS(min_code(build_cycle(10), FamilySpec::weak(1), big), std::invalid_argument);
  SolveOptions cap;
  cap.max_size = 4;
  const auto r = min_code(build_cycle(10), FamilySpec::weak(1), cap);
  CHECK(r.status == SolveStatus::kAboveCap);
  CHECK_FALSE(r.optimum);
}

TEST_CASE("exhaustive search matches the definition oracle") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto rg = oracle::random_connected(rng, n, 0.3);
    const Graph g = to_graph(rg);
    const auto ref = oracle::from_edges(n, rg.edges);
    const int r = static_cast<int>(rng() % 3);
    const int which = static_cast<int>(rng() % 4);
    FamilySpec spec = FamilySpec::weak(r);
    auto ok = [&](const std::vector<int>& c) {
      switch (which) {
        case 0: return oracle::weak_ok(ref, c, r);
        case 1: return oracle::light_ok(ref, c, r);
        case 2: return oracle::identifying_ok(ref, c, r);
        default: return oracle::two_radii_ok(ref, c, r);
      }
    };
    if (which == 1) spec = FamilySpec::light(r);
    if (which == 2) spec = FamilySpec::identifying(r);
    if (which == 3) spec = FamilySpec::general(2, upto(r));

    std::vector<std::vector<int>> optima;
    const int best = oracle::brute_min(n, ok, &optima);
    SolveOptions opts;
    opts.enumerate_all = true;
    const auto got = min_code(g, spec, opts);
    if (best < 0) {
      CHECK(got.status == SolveStatus::kInfeasible);
      continue;
    }
    REQUIRE(got.status == SolveStatus::kOptimal);
    CHECK(*got.optimum == static_cast<std::size_t>(best));
    CHECK(to_ints(got.witness_code) == optima.front());
    CHECK(as_ints(got.all_optima) == optima);
  }
}

TEST_CASE("window pruning never changes the answer") {
  for (Family f : {Family::kWeak, Family::kLight, Family::kTwoRadii}) {
    for (Radius r = 1; r <= 3; ++r) {
      for (std::size_t n = 3; n <= 15; ++n) {
        CAPTURE(n);
        CAPTURE(r);
        SolveOptions on;
        on.enumerate_all = true;
        SolveOptions off = on;
        off.use_cycle_pruning = false;
        const auto spec = cycle::family_spec(f, r);
        const auto a = min_code(build_cycle(n), spec, on);
        const auto b = min_code(build_cycle(n), spec, off);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness_code == b.witness_code);
        CHECK(a.all_optima == b.all_optima);
      }
    }
  }
}

TEST_CASE("thread count does not change the witness") {
  for (std::size_t n : {11, 14, 17}) {
    for (Radius r = 1; r <= 3; ++r) {
      for (const auto& spec : {FamilySpec::weak(r), FamilySpec::light(r), FamilySpec::general(2, upto(r))}) {
        SolveOptions one;
        one.use_cycle_pruning = false;
        SolveOptions many = one;
        many.parallelism = 8;
        const auto a = min_code(build_cycle(n), spec, one);
        const auto b = min_code(build_cycle(n), spec, many);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness_code == b.witness_code);
        one.enumerate_all = many.enumerate_all = true;
        CHECK(min_code(build_cycle(n), spec, one).all_optima ==
              min_code(build_cycle(n), spec, many).all_optima);
      }
    }
  }
}

TEST_CASE("family ordering on sizes") {
  for (Radius r = 1; r <= 3; ++r) {
    for (std::size_t n = 4; n <= 14; ++n) {
      const Graph g = build_cycle(n);
      const auto w = *min_code(g, FamilySpec::weak(r)).optimum;
      const auto t = *min_code(g, FamilySpec::general(2, upto(r))).optimum;
      const auto l = *min_code(g, FamilySpec::light(r)).optimum;
      CHECK(w >= t);
      CHECK(t >= l);
      const auto id = min_code(g, FamilySpec::identifying(r));
      if (id.optimum) CHECK(*id.optimum >= w);
    }
  }
}

TEST_CASE("family recognition for pruning") {
  CHECK(cycle_family_of(FamilySpec::weak(2)) == Family::kWeak);
  CHECK(cycle_family_of(FamilySpec::light(2)) == Family::kLight);
  CHECK(cycle_family_of(FamilySpec::general(2, upto(3))) == Family::kTwoRadii);
  CHECK(cycle_family_of(FamilySpec::general(1, upto(3))) == Family::kWeak);
  CHECK(cycle_family_of(FamilySpec::general(2, upto(1))) == Family::kLight);
  CHECK(cycle_family_of(FamilySpec::general(3, upto(4))) == Family::kLight);
  CHECK_FALSE(cycle_family_of(FamilySpec::general(2, {0, 2})));
  CHECK_FALSE(cycle_family_of(FamilySpec::identifying(2)));
}

TEST_CASE("closed-form tables") {
  const auto weak = verify_theorem_table(Family::kWeak, 2, 2, 6, 18, true);
  CHECK(weak.size() == 13);
  for (const auto& row : weak) CHECK(row.agree);
  CHECK(weak[12 - 6].oracle == 4);
  CHECK(weak[13 - 6].oracle == 5);

  const auto light1 = verify_theorem_table(Family::kLight, 1, 1, 5, 15, true);
  const auto two1 = verify_theorem_table(Family::kTwoRadii, 1, 1, 5, 15, true);
  REQUIRE(light1.size() == two1.size());
  for (std::size_t i = 0; i < light1.size(); ++i) {
    CHECK(light1[i].agree);
    CHECK(two1[i].agree);
    CHECK(light1[i].oracle == two1[i].oracle);
    CHECK(light1[i].formula == two1[i].formula);
  }
  CHECK(light1[10 - 5].oracle == 4);

  const auto short_row = verify_theorem_table(Family::kTwoRadii, 3, 3, 14, 14, true);
  REQUIRE(short_row.size() == 1);
  CHECK(short_row[0].formula == 3);
  CHECK(short_row[0].oracle == 4);
  CHECK_FALSE(short_row[0].agree);

  const auto outside = verify_theorem_table(Family::kTwoRadii, 2, 2, 3, 6, true);
  for (const auto& row : outside) {
    CHECK_FALSE(row.formula);
    CHECK(row.oracle);
  }
}
