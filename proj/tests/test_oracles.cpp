#include "geodom/oracles.hpp"

#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace geodom;
using test::mk;

TEST_CASE("exact_mwds basics") {
  SUBCASE("single disk") {
    auto g = build_containment_graph({mk(0, 0, 0, 1, 7.0)});
    auto r = exact_mwds(g);
    CHECK(r.optimum == doctest::Approx(7.0));
    CHECK(r.witness == std::vector<int>{0});
  }
  SUBCASE("unit-weight clique costs one") {
    std::vector<Disk> disks;
    for (int i = 0; i < 6; ++i) disks.push_back(mk(i, 0.01 * i, 0, 1.0, 1.0));
    auto r = exact_mwds(build_containment_graph(disks));
    CHECK(r.optimum == doctest::Approx(1.0));
    CHECK(r.witness.size() == 1);
  }
  SUBCASE("cap refusal") {
    std::vector<Disk> disks;
    for (int i = 0; i < 25; ++i) disks.push_back(mk(i, i, 0, 0.1));
    auto g = build_containment_graph(disks);
    CHECK_THROWS_WITH_AS(exact_mwds(g), "instance above oracle cap", std::invalid_argument);
  }
}

TEST_CASE("exact_mwds branch-and-bound agrees with plain enumeration") {
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = test::gen_mwds(14000 + trial, 10);
    auto g = build_containment_graph(inst.disks);
    auto a = exact_mwds(g);
    auto b = exact_mwds_enumerate(g);
    CHECK(a.optimum == doctest::Approx(b.optimum));
    CHECK(is_dominating(g, a.witness));
    CHECK(is_dominating(g, b.witness));
    CHECK(test::ids_weight(g.disks, a.witness) == doctest::Approx(a.optimum));
  }
}

TEST_CASE("exact_msds basics") {
  SUBCASE("two-cycle needs a single node") {
    auto dg = build_directed_graph({mk(0, 0, 0, 1), mk(1, 0.5, 0, 1)});
    auto r = exact_msds(dg);
    CHECK(r.optimum == doctest::Approx(1.0));
  }
  SUBCASE("isolated node must pick itself") {
    auto dg = build_directed_graph({mk(0, 0, 0, 1)});
    auto r = exact_msds(dg);
    CHECK(r.optimum == doctest::Approx(1.0));
    CHECK(r.witness == std::vector<int>{0});
  }
  SUBCASE("cap refusal") {
    std::vector<Disk> disks;
    for (int i = 0; i < 25; ++i) disks.push_back(mk(i, i, 0, 0.1));
    CHECK_THROWS_AS(exact_msds(build_directed_graph(disks)), std::invalid_argument);
  }
}

TEST_CASE("exact_msds branch-and-bound agrees with plain enumeration") {
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = test::gen_msds(15000 + trial, 9);
    auto dg = build_directed_graph(inst.disks);
    auto a = exact_msds(dg);
    auto b = exact_msds_enumerate(dg);
    CHECK(a.optimum == doctest::Approx(b.optimum));
    CHECK(is_strongly_dominating(dg, a.witness));
    CHECK(is_strongly_dominating(dg, b.witness));
  }
}

TEST_CASE("exact_lkc basics") {
  SUBCASE("hand instance optimum") {
    auto inst = make_lkc_instance(
        {mk(0, 0, 1, 2.1, 1.0), mk(1, 2, 1, 2.1, 1.0), mk(2, 1, 1, 2.3, 1.5)}, {{0, -1}, {2, -1}},
        1);
    auto r = exact_lkc(inst);
    CHECK(r.optimum == doctest::Approx(1.5));
    CHECK(r.witness == std::vector<int>{2});
  }
  SUBCASE("k equal to the tightest coverage forces all its coverers") {
    // p0 is covered by exactly two disks; with k=2 both are mandatory
    auto inst = make_lkc_instance(
        {mk(0, 0, 1, 2.0, 1.0), mk(1, 0.3, 1, 2.0, 1.0), mk(2, 6, 1, 2.0, 1.0),
         mk(3, 6.3, 1, 2.0, 1.0)},
        {{0.1, -0.5}, {6.1, -0.5}}, 2);
    auto r = exact_lkc(inst);
    CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("infeasible instances are refused") {
    LkcInstance inst;  // built by hand to bypass the maker's precheck
    inst.disks = {mk(0, 0, 1, 2.0, 1.0)};
    inst.points = {{5.0, -0.5}};
    inst.k = 1;
    CHECK_THROWS_WITH_AS(exact_lkc(inst), "point under-covered", std::invalid_argument);
  }
  SUBCASE("cap refusal") {
    std::vector<Disk> disks;
    for (int i = 0; i < 23; ++i) disks.push_back(mk(i, 0.01 * i, 1, 2.0));
    auto inst = make_lkc_instance(std::move(disks), {{0, -0.5}}, 1);
    CHECK_THROWS_AS(exact_lkc(inst), std::invalid_argument);
  }
}

TEST_CASE("exact_lkc branch-and-bound agrees with plain enumeration") {
  int tested = 0;
  for (int trial = 0; tested < 100; ++trial) {
    REQUIRE(trial < 1000);
    Instance gi;
    try {
      gi = test::gen_lkc(16000 + trial, 7, 5, 1 + trial % 2);
    } catch (const std::exception&) {
      continue;
    }
    auto inst = to_lkc(gi);
    ++tested;
    auto a = exact_lkc(inst);
    auto b = exact_lkc_enumerate(inst);
    CHECK(a.optimum == doctest::Approx(b.optimum));
    CHECK(is_k_cover(inst, a.witness));
    CHECK(is_k_cover(inst, b.witness));
  }
}
