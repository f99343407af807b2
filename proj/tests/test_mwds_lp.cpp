#include "geodom/mwds_lp.hpp"

#include <cmath>

#include "doctest.h"
#include "geodom/oracles.hpp"
#include "geodom/simplex.hpp"
#include "support.hpp"

using namespace geodom;
using test::mk;

TEST_CASE("packing simplex solves hand-checked LPs") {
  SUBCASE("one variable") {
    auto r = solve_packing_lp({{1.0}}, {3.0}, {1.0});
    CHECK(r.objective == doctest::Approx(3.0));
    CHECK(r.dual[0] == doctest::Approx(1.0));
  }
  SUBCASE("two constraints") {
    // max y1 + y2, y1 <= 1, y1 + y2 <= 3
    auto r = solve_packing_lp({{1.0, 0.0}, {1.0, 1.0}}, {1.0, 3.0}, {1.0, 1.0});
    CHECK(r.objective == doctest::Approx(3.0));
  }
  SUBCASE("degenerate duplicate columns") {
    auto r = solve_packing_lp({{1.0, 1.0}, {1.0, 1.0}}, {2.0, 2.0}, {1.0, 1.0});
    CHECK(r.objective == doctest::Approx(2.0));
  }
}

TEST_CASE("solve_lp_relaxation on tiny hand instances") {
  SUBCASE("single disk") {
    auto g = build_containment_graph({mk(0, 0, 0, 1, 3.0)});
    auto sol = solve_lp_relaxation(g);
    CHECK(sol.x[0] == doctest::Approx(1.0));
    CHECK(sol.objective == doctest::Approx(3.0));
  }
  SUBCASE("adjacent pair of unit weights") {
    auto g = build_containment_graph({mk(0, 0, 0, 1, 1.0), mk(1, 0.5, 0, 1, 1.0)});
    auto sol = solve_lp_relaxation(g);
    CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("clique of k unit-weight disks") {
    std::vector<Disk> disks;
    for (int i = 0; i < 5; ++i) disks.push_back(mk(i, 0.05 * i, 0.0, 1.0, 1.0));
    auto g = build_containment_graph(disks);
    auto sol = solve_lp_relaxation(g);
    CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("lp solution is feasible and in the unit box") {
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = test::gen_mwds(100 + trial, 24);
    auto g = build_containment_graph(inst.disks);
    auto sol = solve_lp_relaxation(g);
    for (double v : sol.x) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + kLpEps);
    }
    for (int d = 0; d < g.size(); ++d) {
      double cov = 0.0;
      for (int a : g.closed[d]) cov += sol.x[a];
      CHECK(cov >= 1.0 - kLpEps);
    }
  }
}

TEST_CASE("lp objective lower-bounds the exact integral optimum") {
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = test::gen_mwds(300 + trial, 11);
    auto g = build_containment_graph(inst.disks);
    auto sol = solve_lp_relaxation(g);
    auto exact = exact_mwds(g);
    CHECK(sol.objective <= exact.optimum + 1e-6);
  }
}

TEST_CASE("round_to_multiset arithmetic") {
  LpSolution sol;
  SUBCASE("floor of 2n x") {
    sol.x = {0.6};
    CHECK(round_to_multiset(sol, 3).counts[0] == 3);  // floor(3.6)
  }
  SUBCASE("tiny fractions get no copy") {
    sol.x = {0.05};
    CHECK(round_to_multiset(sol, 3).counts[0] == 0);  // x < 1/(2n)
  }
  SUBCASE("full selection doubles") {
    sol.x = {1.0};
    CHECK(round_to_multiset(sol, 5).counts[0] == 10);
  }
}

TEST_CASE("multiplicity counts closed-neighborhood copies") {
  auto g = build_containment_graph(test::path3());
  DiskMultiset ms;
  ms.counts = {0, 0, 0};
  CHECK(multiplicity(ms, g, 0) == 0);
  ms.counts = {5, 0, 0};
  CHECK(multiplicity(ms, g, 0) == 5);  // own copies count via N[D]
  CHECK(multiplicity(ms, g, 1) == 5);
  CHECK(multiplicity(ms, g, 2) == 0);
}

TEST_CASE("rounded multiset satisfies both multiset facts") {
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = test::gen_mwds(500 + trial, 20);
    auto g = build_containment_graph(inst.disks);
    const long long n = g.size();
    auto sol = solve_lp_relaxation(g);
    auto ms = round_to_multiset(sol, n);
    for (int d = 0; d < g.size(); ++d) {
      CHECK(multiplicity(ms, g, d) >= n);
    }
    CHECK(ms.total_weight(g.disks) <=
          2.0 * static_cast<double>(n) * sol.objective + 2.0 * n * kLpEps);
  }
}

TEST_CASE("duplicate disks get independent variables and a clean optimum") {
  // two exact copies plus a far singleton
  std::vector<Disk> disks = {mk(0, 0, 0, 1, 4.0), mk(1, 0, 0, 1, 4.0), mk(2, 9, 0, 1, 2.0)};
  auto g = build_containment_graph(disks);
  auto sol = solve_lp_relaxation(g);
  CHECK(sol.objective == doctest::Approx(6.0));  // one copy's worth plus the singleton
  CHECK(sol.x[0] + sol.x[1] == doctest::Approx(1.0));
  CHECK(sol.x[2] == doctest::Approx(1.0));
}
