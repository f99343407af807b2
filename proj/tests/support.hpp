#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "geodom/generator.hpp"
#include "geodom/graphs.hpp"
#include "geodom/instance.hpp"
#include "geodom/lkc.hpp"
#include "geodom/rng.hpp"

namespace geodom::test {

inline Disk mk(int id, double x, double y, double r, double w = 1.0) {
  return Disk{id, {x, y}, r, w};
}

// Three-disk path A - B - C in the containment graph.
inline std::vector<Disk> path3() {
  return {mk(0, 0.0, 0.0, 1.0), mk(1, 1.0, 0.0, 1.0), mk(2, 2.0, 0.0, 1.0)};
}

inline double ids_weight(const std::vector<Disk>& disks, const std::vector<int>& ids) {
  double w = 0.0;
  for (int id : ids) w += disks[id].weight;
  return w;
}

// All subsets of {0..m-1} as sorted id vectors, increasing mask order.
template <typename Fn>
void for_each_subset(int m, Fn&& fn) {
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) ids.push_back(i);
    }
    fn(ids);
  }
}

// Definition-level minimal startup cost over all feasible K-covers.
inline double brute_min_startup(const LkcInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  for_each_subset(inst.num_disks(), [&](const std::vector<int>& ids) {
    if (ids.empty() || !is_k_cover(inst, ids)) return;
    best = std::min(best, startup_cost(inst, ids));
  });
  return best;
}

// Random disks in a box, radii in [rmin, rmax].
inline std::vector<Disk> random_disks(SplitMix64& rng, int n, double box, double rmin, double rmax) {
  std::vector<Disk> disks;
  for (int i = 0; i < n; ++i) {
    disks.push_back(mk(i, rng.next_range(0.0, box), rng.next_range(0.0, box),
                       rng.next_range(rmin, rmax), rng.next_range(1.0, 10.0)));
  }
  return disks;
}

inline Instance gen_mwds(std::uint64_t seed, int n, double density = 2.5) {
  GenParams p;
  p.kind = ProblemKind::kMwds;
  p.num_disks = n;
  p.density = density;
  p.seed = seed;
  return generate(p);
}

inline Instance gen_msds(std::uint64_t seed, int n, double density = 2.5) {
  GenParams p;
  p.kind = ProblemKind::kMsds;
  p.num_disks = n;
  p.density = density;
  p.seed = seed;
  return generate(p);
}

inline Instance gen_lkc(std::uint64_t seed, int m, int n, int k, double rmin = 0.8,
                        double rmax = 1.6, double density = 2.0) {
  GenParams p;
  p.kind = ProblemKind::kLkc;
  p.num_disks = m;
  p.num_points = n;
  p.k = k;
  p.radius_min = rmin;
  p.radius_max = rmax;
  p.density = density;
  p.seed = seed;
  return generate(p);
}

}  // namespace geodom::test
