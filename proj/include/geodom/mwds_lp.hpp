#pragma once

#include <cstdint>
#include <vector>

#include "geodom/graphs.hpp"

namespace geodom {

// Feasibility / optimality tolerance for the covering LP.
inline constexpr double kLpEps = 1e-7;

// Fractional solution of  min sum c(D) x_D  s.t.  sum_{A in N[D]} x_A >= 1,
// x >= 0. Values are indexed by disk id and lie in [0, 1] at optimality.
struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
};

// Multiset of disks, stored as per-id copy counts.
struct DiskMultiset {
  std::vector<long long> counts;

  long long count(int id) const { return counts[id]; }
  long long total_elements() const;
  double total_weight(const std::vector<Disk>& disks) const;
  std::vector<int> support() const;  // ids with count > 0, sorted
};

LpSolution solve_lp_relaxation(const ContainmentGraph& g);

// floor(2n * x_D) copies of each disk, weights inherited.
DiskMultiset round_to_multiset(const LpSolution& sol, long long n);

// Number of multiset elements in the closed neighborhood of disk `id`.
long long multiplicity(const DiskMultiset& ms, const ContainmentGraph& g, int id);

}  // namespace geodom
