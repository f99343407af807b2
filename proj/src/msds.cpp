#include "geodom/msds.hpp"

#include <algorithm>
#include <stdexcept>

namespace geodom {

namespace {

// Both reductions are set-cover shaped: rows are requirements, each row lists
// the ground elements satisfying it. The local search below works on that
// shared form.
struct Rows {
  int ground = 0;
  std::vector<std::vector<int>> sat;
};

bool feasible(const Rows& rows, const std::vector<char>& chosen) {
  for (const auto& row : rows.sat) {
    bool ok = false;
    for (int e : row) {
      if (chosen[e]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<int> mask_to_ids(const std::vector<char>& chosen) {
  std::vector<int> ids;
  for (size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) ids.push_back(static_cast<int>(i));
  }
  return ids;
}

// Enumerate index combinations of size `k` from 0..n-1 in lexicographic
// order, calling fn for each; fn returning true stops the enumeration.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// One improving swap: remove `s` chosen elements, add at most s-1 others.
// Returns true and applies the swap in `chosen` when found.
bool find_swap(const Rows& rows, std::vector<char>& chosen, int s) {
  std::vector<int> cur = mask_to_ids(chosen);
  const int n_cur = static_cast<int>(cur.size());
  if (s > n_cur) return false;

  std::vector<int> others;
  for (int e = 0; e < rows.ground; ++e) {
    if (!chosen[e]) others.push_back(e);
  }

  return for_each_combination(n_cur, s, [&](const std::vector<int>& rem_idx) {
    std::vector<char> trial = chosen;
    for (int i : rem_idx) trial[cur[i]] = 0;
    if (feasible(rows, trial)) {
      chosen = trial;
      return true;
    }
    for (int add = 1; add <= s - 1; ++add) {
      bool done = for_each_combination(static_cast<int>(others.size()), add,
                                       [&](const std::vector<int>& add_idx) {
                                         for (int i : add_idx) trial[others[i]] = 1;
                                         const bool ok = feasible(rows, trial);
                                         if (!ok) {
                                           for (int i : add_idx) trial[others[i]] = 0;
                                         }
                                         return ok;
                                       });
      if (done) {
        chosen = trial;
        return true;
      }
    }
    return false;
  });
}

std::vector<int> local_search(const Rows& rows, int k, std::optional<std::vector<int>> initial) {
  if (k < 1) throw std::invalid_argument("swap size must be at least 1");
  std::vector<char> chosen(rows.ground, 1);
  if (initial) {
    std::fill(chosen.begin(), chosen.end(), 0);
    for (int e : *initial) chosen[e] = 1;
    if (!feasible(rows, chosen)) throw std::invalid_argument("infeasible starting solution");
  }

  bool improved = true;
  while (improved) {
    improved = false;
    for (int s = 1; s <= k && !improved; ++s) improved = find_swap(rows, chosen, s);
  }
  return mask_to_ids(chosen);
}

bool swap_optimal(const Rows& rows, const std::vector<int>& solution, int k) {
  std::vector<char> chosen(rows.ground, 0);
  for (int e : solution) chosen[e] = 1;
  if (!feasible(rows, chosen)) return false;
  for (int s = 1; s <= k; ++s) {
    std::vector<char> probe = chosen;
    if (find_swap(rows, probe, s)) return false;
  }
  return true;
}

Rows hitting_rows(const HittingInstance& inst) { return {inst.size, inst.hitters}; }
Rows cover_rows(const CoverInstance& inst) { return {inst.size, inst.coverers}; }

}  // namespace

HittingInstance forward_instance(const DirectedDiskGraph& dg) {
  HittingInstance inst;
  inst.size = dg.size();
  inst.hitters.assign(inst.size, {});
  for (int v = 0; v < inst.size; ++v) {
    inst.hitters[v] = dg.out_arcs[v];
    inst.hitters[v].insert(
        std::lower_bound(inst.hitters[v].begin(), inst.hitters[v].end(), v), v);
  }
  return inst;
}

CoverInstance backward_instance(const DirectedDiskGraph& dg) {
  CoverInstance inst;
  inst.size = dg.size();
  inst.coverers.assign(inst.size, {});
  for (int v = 0; v < inst.size; ++v) {
    inst.coverers[v] = dg.in_arcs[v];
    inst.coverers[v].insert(
        std::lower_bound(inst.coverers[v].begin(), inst.coverers[v].end(), v), v);
  }
  return inst;
}

bool hits_all(const HittingInstance& inst, const std::vector<int>& chosen) {
  std::vector<char> mask(inst.size, 0);
  for (int e : chosen) mask[e] = 1;
  return feasible(hitting_rows(inst), mask);
}

bool covers_all(const CoverInstance& inst, const std::vector<int>& chosen) {
  std::vector<char> mask(inst.size, 0);
  for (int e : chosen) mask[e] = 1;
  return feasible(cover_rows(inst), mask);
}

std::vector<int> local_search_hitting(const HittingInstance& inst, int k,
                                      std::optional<std::vector<int>> initial) {
  return local_search(hitting_rows(inst), k, std::move(initial));
}

std::vector<int> local_search_cover(const CoverInstance& inst, int k,
                                    std::optional<std::vector<int>> initial) {
  return local_search(cover_rows(inst), k, std::move(initial));
}

bool is_k_swap_optimal_hitting(const HittingInstance& inst, const std::vector<int>& solution,
                               int k) {
  return swap_optimal(hitting_rows(inst), solution, k);
}

bool is_k_swap_optimal_cover(const CoverInstance& inst, const std::vector<int>& solution, int k) {
  return swap_optimal(cover_rows(inst), solution, k);
}

std::vector<int> solve_msds(const DirectedDiskGraph& dg, int swap_k) {
  const std::vector<int> u1 = local_search_hitting(forward_instance(dg), swap_k);
  const std::vector<int> u2 = local_search_cover(backward_instance(dg), swap_k);

  std::vector<int> u = u1;
  u.insert(u.end(), u2.begin(), u2.end());
  u = prune_redundant(dg.disks, std::move(u),
                      [&](const std::vector<int>& s) { return is_strongly_dominating(dg, s); });
  if (!is_strongly_dominating(dg, u)) throw std::runtime_error("msds output infeasible");
  return u;
}

}  // namespace geodom
