#pragma once

#include <cstdint>
#include <vector>

#include "geodom/graphs.hpp"
#include "geodom/lkc.hpp"

namespace geodom {

struct OracleResult {
  double optimum = 0.0;
  std::vector<int> witness;  // sorted ids
  std::uint64_t nodes_explored = 0;
  double seconds = 0.0;
};

// Exact solvers for desk-scale ratio measurement. Each refuses (throws)
// beyond its size cap instead of silently truncating the search. The
// *_enumerate variants are the independent second route used to cross-check
// the branch-and-bound implementations.

inline constexpr int kMwdsOracleCap = 20;
inline constexpr int kMsdsOracleCap = 20;
inline constexpr int kLkcOracleCap = 22;

OracleResult exact_mwds(const ContainmentGraph& g, int cap = kMwdsOracleCap);
OracleResult exact_mwds_enumerate(const ContainmentGraph& g, int cap = kMwdsOracleCap);

OracleResult exact_msds(const DirectedDiskGraph& dg, int cap = kMsdsOracleCap);
OracleResult exact_msds_enumerate(const DirectedDiskGraph& dg, int cap = kMsdsOracleCap);

OracleResult exact_lkc(const LkcInstance& inst, int cap = kLkcOracleCap);
OracleResult exact_lkc_enumerate(const LkcInstance& inst, int cap = kLkcOracleCap);

}  // namespace geodom
