#pragma once

#include <optional>
#include <vector>

#include "geodom/graphs.hpp"

namespace geodom {

// Hitting-set view of forward domination: choosing point u hits range D_v
// exactly when v can transmit to u (arc v->u, or u == v).
struct HittingInstance {
  int size = 0;
  std::vector<std::vector<int>> hitters;  // hitters[v] = points inside D_v, sorted
};

// Disk-cover view of backward domination: choosing disk u covers target v
// exactly when v can receive from u (arc u->v, or u == v).
struct CoverInstance {
  int size = 0;
  std::vector<std::vector<int>> coverers;  // coverers[v] = disks containing v's center, sorted
};

HittingInstance forward_instance(const DirectedDiskGraph& dg);
CoverInstance backward_instance(const DirectedDiskGraph& dg);

bool hits_all(const HittingInstance& inst, const std::vector<int>& chosen);
bool covers_all(const CoverInstance& inst, const std::vector<int>& chosen);

// k-swap local search descent starting from the full ground set (or from
// `initial` when provided): replace up to k chosen elements by strictly fewer,
// first improving swap in lexicographic scan order, until no swap applies.
std::vector<int> local_search_hitting(const HittingInstance& inst, int k,
                                      std::optional<std::vector<int>> initial = std::nullopt);
std::vector<int> local_search_cover(const CoverInstance& inst, int k,
                                    std::optional<std::vector<int>> initial = std::nullopt);

// Forward phase + backward phase + redundancy pruning.
std::vector<int> solve_msds(const DirectedDiskGraph& dg, int swap_k);

// True when no subset of `solution` of size <= k can be swapped for a
// strictly smaller replacement. Enumerative; meant for k <= 3.
bool is_k_swap_optimal_hitting(const HittingInstance& inst, const std::vector<int>& solution, int k);
bool is_k_swap_optimal_cover(const CoverInstance& inst, const std::vector<int>& solution, int k);

}  // namespace geodom
