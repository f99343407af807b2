#include "geodom/msds.hpp"

#include <algorithm>

#include "doctest.h"
#include "geodom/oracles.hpp"
#include "support.hpp"

using namespace geodom;
using test::mk;

namespace {

bool is_forward_dominating(const DirectedDiskGraph& dg, const std::vector<int>& u) {
  std::vector<char> mask(dg.size(), 0);
  for (int id : u) mask[id] = 1;
  for (int v = 0; v < dg.size(); ++v) {
    if (mask[v]) continue;
    bool ok = false;
    for (int w : dg.out_arcs[v]) {
      if (mask[w]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_backward_dominating(const DirectedDiskGraph& dg, const std::vector<int>& u) {
  std::vector<char> mask(dg.size(), 0);
  for (int id : u) mask[id] = 1;
  for (int v = 0; v < dg.size(); ++v) {
    if (mask[v]) continue;
    bool ok = false;
    for (int w : dg.in_arcs[v]) {
      if (mask[w]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Exact minimum hitting set by subset enumeration, for ratio measurement.
int brute_min_hitting(const HittingInstance& inst) {
  int best = inst.size + 1;
  test::for_each_subset(inst.size, [&](const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) < best && hits_all(inst, ids)) {
      best = static_cast<int>(ids.size());
    }
  });
  return best;
}

int brute_min_cover(const CoverInstance& inst) {
  int best = inst.size + 1;
  test::for_each_subset(inst.size, [&](const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) < best && covers_all(inst, ids)) {
      best = static_cast<int>(ids.size());
    }
  });
  return best;
}

DirectedDiskGraph random_digraph(std::uint64_t seed, int n) {
  return build_directed_graph(test::gen_msds(seed, n, 3.0).disks);
}

}  // namespace

TEST_CASE("forward and backward instances on tiny examples") {
  SUBCASE("single node hits and covers itself") {
    auto dg = build_directed_graph({mk(0, 0, 0, 1)});
    CHECK(forward_instance(dg).hitters[0] == std::vector<int>{0});
    CHECK(backward_instance(dg).coverers[0] == std::vector<int>{0});
  }
  SUBCASE("asymmetric pair") {
    // A's disk reaches B's center, B's does not reach A's
    auto dg = build_directed_graph({mk(0, 0, 0, 5), mk(1, 3, 0, 1)});
    auto hit = forward_instance(dg);
    CHECK(hit.hitters[1] == std::vector<int>{1});     // D_B hit only by B itself
    CHECK(hit.hitters[0] == std::vector<int>{0, 1});  // D_A hit by either center
    auto cov = backward_instance(dg);
    CHECK(cov.coverers[1] == std::vector<int>{0, 1});  // B receives from A or itself
    CHECK(cov.coverers[0] == std::vector<int>{0});
  }
}

TEST_CASE("reduction equivalence against the direct definitions") {
  for (int trial = 0; trial < 200; ++trial) {
    auto dg = random_digraph(6000 + trial, 7);
    auto hit = forward_instance(dg);
    auto cov = backward_instance(dg);
    test::for_each_subset(7, [&](const std::vector<int>& ids) {
      CHECK(hits_all(hit, ids) == is_forward_dominating(dg, ids));
      CHECK(covers_all(cov, ids) == is_backward_dominating(dg, ids));
      const bool strong = is_strongly_dominating(dg, ids);
      CHECK(strong == (is_forward_dominating(dg, ids) && is_backward_dominating(dg, ids)));
    });
  }
}

TEST_CASE("local search finds a shared hitter") {
  // every range contains point 0
  std::vector<Disk> disks;
  disks.push_back(mk(0, 0, 0, 1));
  disks.push_back(mk(1, 0.3, 0, 1));
  disks.push_back(mk(2, -0.3, 0, 1));
  auto dg = build_directed_graph(disks);
  auto sol = local_search_hitting(forward_instance(dg), 1);
  CHECK(sol.size() == 1);
}

TEST_CASE("local search solutions are 1-minimal") {
  for (int trial = 0; trial < 40; ++trial) {
    auto dg = random_digraph(6300 + trial, 9);
    auto inst = forward_instance(dg);
    auto sol = local_search_hitting(inst, 2);
    REQUIRE(hits_all(inst, sol));
    for (size_t drop = 0; drop < sol.size(); ++drop) {
      std::vector<int> sub;
      for (size_t j = 0; j < sol.size(); ++j) {
        if (j != drop) sub.push_back(sol[j]);
      }
      CHECK_FALSE(hits_all(inst, sub));
    }
  }
}

TEST_CASE("local search ratio versus brute force stays within 2") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(SplitMix64(trial).next_below(7));  // up to 10
    auto dg = random_digraph(6600 + trial, n);
    auto hit = forward_instance(dg);
    auto sol = local_search_hitting(hit, 3);
    const int opt = brute_min_hitting(hit);
    CHECK(static_cast<double>(sol.size()) <= 2.0 * opt);

    auto cov = backward_instance(dg);
    auto sol2 = local_search_cover(cov, 3);
    const int opt2 = brute_min_cover(cov);
    CHECK(static_cast<double>(sol2.size()) <= 2.0 * opt2);
  }
}

TEST_CASE("swap size k+1 continuation never loses to the k result") {
  for (int trial = 0; trial < 30; ++trial) {
    auto dg = random_digraph(6900 + trial, 9);
    auto inst = forward_instance(dg);
    auto base = local_search_hitting(inst, 2);
    auto cont = local_search_hitting(inst, 3, base);
    CHECK(cont.size() <= base.size());
  }
}

TEST_CASE("k-swap optimality certificates") {
  for (int trial = 0; trial < 25; ++trial) {
    auto dg = random_digraph(7200 + trial, 8);
    auto inst = forward_instance(dg);
    auto sol = local_search_hitting(inst, 3);
    CHECK(is_k_swap_optimal_hitting(inst, sol, 3));
    auto cov = backward_instance(dg);
    auto sol2 = local_search_cover(cov, 3);
    CHECK(is_k_swap_optimal_cover(cov, sol2, 3));
  }
}

TEST_CASE("solve_msds basics") {
  SUBCASE("mutual pair needs at most two nodes") {
    auto dg = build_directed_graph({mk(0, 0, 0, 1), mk(1, 0.5, 0, 1)});
    auto u = solve_msds(dg, 3);
    CHECK(u.size() <= 2);
    CHECK(is_strongly_dominating(dg, u));
  }
  SUBCASE("union bound and feasibility on random digraphs") {
    for (int trial = 0; trial < 60; ++trial) {
      auto dg = random_digraph(7500 + trial, 9);
      auto u1 = local_search_hitting(forward_instance(dg), 3);
      auto u2 = local_search_cover(backward_instance(dg), 3);
      auto u = solve_msds(dg, 3);
      CHECK(u.size() <= u1.size() + u2.size());
      CHECK(is_strongly_dominating(dg, u));
    }
  }
  SUBCASE("isolated node is taken into the solution") {
    // node 1 reaches nothing and nothing reaches it
    auto dg = build_directed_graph({mk(0, 0, 0, 1), mk(1, 10, 0, 0.5)});
    auto u = solve_msds(dg, 2);
    CHECK(std::find(u.begin(), u.end(), 1) != u.end());
    CHECK(is_strongly_dominating(dg, u));
  }
}

TEST_CASE("solve_msds ratio versus the exact oracle stays within 3") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(SplitMix64(trial).next_below(7));
    auto dg = random_digraph(7800 + trial, n);
    auto u = solve_msds(dg, 3);
    auto exact = exact_msds(dg);
    CHECK(static_cast<double>(u.size()) >= exact.optimum - 1e-9);
    CHECK(static_cast<double>(u.size()) <= 3.0 * exact.optimum);
  }
}
