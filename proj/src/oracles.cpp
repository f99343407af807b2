#include "geodom/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace geodom {

namespace {

constexpr double kTieTol = 1e-9;  // "strictly better" tolerance on weights

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> mask_to_ids(std::uint64_t mask, const std::vector<int>& order) {
  std::vector<int> ids;
  for (size_t i = 0; i < order.size(); ++i) {
    if (mask >> i & 1) ids.push_back(order[i]);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

OracleResult exact_mwds(const ContainmentGraph& g, int cap) {
  const int n = g.size();
  if (n > cap) throw std::invalid_argument("instance above oracle cap");
  if (n == 0) throw std::invalid_argument("empty instance");
  if (n > 63) throw std::invalid_argument("instance above oracle cap");

  // Disks in increasing weight; closed-neighborhood masks in that order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.disks[a].weight != g.disks[b].weight) return g.disks[a].weight < g.disks[b].weight;
    return a < b;
  });
  std::vector<std::uint64_t> covers(n, 0);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (int a : g.closed[order[i]]) covers[i] |= 1ULL << pos[a];
  }
  // suffix_union[i] = everything disks i.. can still dominate
  std::vector<std::uint64_t> suffix_union(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix_union[i] = suffix_union[i + 1] | covers[i];

  const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  const auto start = Clock::now();

  std::uint64_t chosen = 0;
  auto rec = [&](auto&& self, int i, std::uint64_t covered, double weight) -> void {
    ++res.nodes_explored;
    if (weight >= res.optimum - kTieTol) return;
    if (covered == all) {
      res.optimum = weight;
      res.witness = mask_to_ids(chosen, order);
      return;
    }
    if (i == static_cast<int>(covers.size())) return;
    if ((covered | suffix_union[i]) != all) return;  // remaining disks cannot finish
    chosen |= 1ULL << i;
    self(self, i + 1, covered | covers[i], weight + g.disks[order[i]].weight);
    chosen &= ~(1ULL << i);
    self(self, i + 1, covered, weight);
  };
  rec(rec, 0, 0, 0.0);

  if (!std::isfinite(res.optimum)) throw std::runtime_error("no dominating set found");
  res.seconds = elapsed_seconds(start);
  return res;
}

OracleResult exact_mwds_enumerate(const ContainmentGraph& g, int cap) {
  const int n = g.size();
  if (n > cap || n > 25) throw std::invalid_argument("instance above oracle cap");
  if (n == 0) throw std::invalid_argument("empty instance");

  std::vector<std::uint64_t> covers(n, 0);
  for (int d = 0; d < n; ++d) {
    for (int a : g.closed[d]) covers[d] |= 1ULL << a;
  }
  const std::uint64_t all = (1ULL << n) - 1;
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;

  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  const auto start = Clock::now();
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    ++res.nodes_explored;
    std::uint64_t covered = 0;
    double weight = 0.0;
    for (int d = 0; d < n; ++d) {
      if (mask >> d & 1) {
        covered |= covers[d];
        weight += g.disks[d].weight;
      }
    }
    if (covered == all && weight < res.optimum - kTieTol) {
      res.optimum = weight;
      res.witness = mask_to_ids(mask, ident);
    }
  }
  if (!std::isfinite(res.optimum)) throw std::runtime_error("no dominating set found");
  res.seconds = elapsed_seconds(start);
  return res;
}

namespace {

bool strongly_dominating_mask(const std::vector<std::uint64_t>& out_mask,
                              const std::vector<std::uint64_t>& in_mask, std::uint64_t u) {
  const int n = static_cast<int>(out_mask.size());
  for (int v = 0; v < n; ++v) {
    if (u >> v & 1) continue;
    if (!(out_mask[v] & u) || !(in_mask[v] & u)) return false;
  }
  return true;
}

void directed_masks(const DirectedDiskGraph& dg, std::vector<std::uint64_t>& out_mask,
                    std::vector<std::uint64_t>& in_mask) {
  const int n = dg.size();
  out_mask.assign(n, 0);
  in_mask.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : dg.out_arcs[v]) out_mask[v] |= 1ULL << w;
    for (int w : dg.in_arcs[v]) in_mask[v] |= 1ULL << w;
  }
}

}  // namespace

OracleResult exact_msds(const DirectedDiskGraph& dg, int cap) {
  const int n = dg.size();
  if (n > cap || n > 25) throw std::invalid_argument("instance above oracle cap");
  if (n == 0) throw std::invalid_argument("empty instance");

  std::vector<std::uint64_t> out_mask, in_mask;
  directed_masks(dg, out_mask, in_mask);
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;

  OracleResult res;
  const auto start = Clock::now();

  // Branch and bound on cardinality: depth-first include/exclude with the
  // best-so-far as bound. Nodes that nobody dominates force themselves in.
  std::uint64_t best_mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  int best = n;
  std::uint64_t chosen = 0;
  auto rec = [&](auto&& self, int v, int size) -> void {
    ++res.nodes_explored;
    if (size >= best) return;
    if (v == n) {
      if (strongly_dominating_mask(out_mask, in_mask, chosen)) {
        best = size;
        best_mask = chosen;
      }
      return;
    }
    chosen |= 1ULL << v;
    self(self, v + 1, size + 1);
    chosen &= ~(1ULL << v);
    // excluding v is only viable if v can still be dominated from both sides
    if (out_mask[v] != 0 && in_mask[v] != 0) self(self, v + 1, size);
  };
  rec(rec, 0, 0);

  if (!strongly_dominating_mask(out_mask, in_mask, best_mask)) {
    throw std::runtime_error("no strongly dominating set found");
  }
  res.optimum = static_cast<double>(best);
  res.witness = mask_to_ids(best_mask, ident);
  res.seconds = elapsed_seconds(start);
  return res;
}

OracleResult exact_msds_enumerate(const DirectedDiskGraph& dg, int cap) {
  const int n = dg.size();
  if (n > cap || n > 25) throw std::invalid_argument("instance above oracle cap");
  if (n == 0) throw std::invalid_argument("empty instance");

  std::vector<std::uint64_t> out_mask, in_mask;
  directed_masks(dg, out_mask, in_mask);
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;

  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  const auto start = Clock::now();
  const std::uint64_t all = (1ULL << n) - 1;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    ++res.nodes_explored;
    const int size = std::popcount(mask);
    if (size >= res.optimum) continue;
    if (strongly_dominating_mask(out_mask, in_mask, mask)) {
      res.optimum = size;
      res.witness = mask_to_ids(mask, ident);
    }
  }
  res.seconds = elapsed_seconds(start);
  return res;
}

OracleResult exact_lkc(const LkcInstance& inst, int cap) {
  const int m = inst.num_disks();
  const int n = inst.num_points();
  if (m > cap || m > 63) throw std::invalid_argument("instance above oracle cap");

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.disks[a].weight != inst.disks[b].weight) {
      return inst.disks[a].weight < inst.disks[b].weight;
    }
    return a < b;
  });

  std::vector<std::vector<char>> cov(m, std::vector<char>(n, 0));
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < n; ++p) cov[i][p] = contains(inst.disks[order[i]], inst.points[p]) ? 1 : 0;
  }
  // how many of the disks from index i on still cover each point
  std::vector<std::vector<int>> suffix(m + 1, std::vector<int>(n, 0));
  for (int i = m - 1; i >= 0; --i) {
    for (int p = 0; p < n; ++p) suffix[i][p] = suffix[i + 1][p] + cov[i][p];
  }
  for (int p = 0; p < n; ++p) {
    if (suffix[0][p] < inst.k) throw std::invalid_argument("point under-covered");
  }

  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  const auto start = Clock::now();
  std::vector<int> needed(n, inst.k);
  std::uint64_t chosen = 0;

  auto rec = [&](auto&& self, int i, double weight) -> void {
    ++res.nodes_explored;
    if (weight >= res.optimum - kTieTol) return;
    bool done = true;
    for (int p = 0; p < n; ++p) {
      if (needed[p] > 0) {
        done = false;
        if (needed[p] > suffix[i][p]) return;  // cannot finish
      }
    }
    if (done) {
      res.optimum = weight;
      res.witness = mask_to_ids(chosen, order);
      return;
    }
    chosen |= 1ULL << i;
    for (int p = 0; p < n; ++p) needed[p] -= cov[i][p];
    self(self, i + 1, weight + inst.disks[order[i]].weight);
    for (int p = 0; p < n; ++p) needed[p] += cov[i][p];
    chosen &= ~(1ULL << i);
    self(self, i + 1, weight);
  };
  rec(rec, 0, 0.0);

  if (!std::isfinite(res.optimum)) throw std::runtime_error("no feasible cover found");
  res.seconds = elapsed_seconds(start);
  return res;
}

OracleResult exact_lkc_enumerate(const LkcInstance& inst, int cap) {
  const int m = inst.num_disks();
  if (m > cap || m > 25) throw std::invalid_argument("instance above oracle cap");

  std::vector<int> ident(m);
  for (int i = 0; i < m; ++i) ident[i] = i;

  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();
  const auto start = Clock::now();
  const std::uint64_t all = (m == 0) ? 0 : ((1ULL << m) - 1);
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    ++res.nodes_explored;
    std::vector<int> ids = mask_to_ids(mask, ident);
    double weight = 0.0;
    for (int id : ids) weight += inst.disks[id].weight;
    if (weight >= res.optimum - kTieTol) continue;
    if (is_k_cover(inst, ids)) {
      res.optimum = weight;
      res.witness = std::move(ids);
    }
  }
  if (!std::isfinite(res.optimum)) throw std::runtime_error("no feasible cover found");
  res.seconds = elapsed_seconds(start);
  return res;
}

}  // namespace geodom
