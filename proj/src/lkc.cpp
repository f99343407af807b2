#include "geodom/lkc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace geodom {

namespace {

const Disk& disk_by_id(const LkcInstance& inst, int id) {
  static const Disk dummy = dummy_disk();
  if (id == kDummyDiskId) return dummy;
  return inst.disks[id];
}

// Dominance-order sort of disk ids at the point's vertical line.
void sort_by_dominance(const LkcInstance& inst, std::vector<int>& ids, double x_line) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return line_order(disk_by_id(inst, a), disk_by_id(inst, b), x_line);
  });
}

double tuple_weight(const LkcInstance& inst, const SkylineTuple& t) {
  double w = 0.0;
  for (int id : t) w += disk_by_id(inst, id).weight;
  return w;
}

// Weight of disks in `cur` that are absent from `prev`.
double entering_weight(const LkcInstance& inst, const SkylineTuple& prev,
                       const SkylineTuple& cur) {
  double w = 0.0;
  for (int id : cur) {
    if (std::find(prev.begin(), prev.end(), id) == prev.end()) {
      w += disk_by_id(inst, id).weight;
    }
  }
  return w;
}

}  // namespace

LkcInstance make_lkc_instance(std::vector<Disk> disks, std::vector<Point> points, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (const Disk& d : disks) {
    if (!(d.center.y > 0.0)) throw std::invalid_argument("disk center not above the line");
    if (!(d.radius > 0.0) || !(d.weight > 0.0)) throw std::invalid_argument("malformed disk");
  }
  for (const Point& p : points) {
    if (p.y > 0.0) throw std::invalid_argument("point above the line");
  }

  // Stable de-tie before sorting so the sweep order is strict.
  for (size_t i = 0; i < points.size(); ++i) points[i].x += static_cast<double>(i) * kTieEps;
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });

  LkcInstance inst{std::move(disks), std::move(points), k};
  for (int i = 0; i < inst.num_points(); ++i) {
    int cov = 0;
    for (const Disk& d : inst.disks) {
      if (contains(d, inst.points[i])) ++cov;
    }
    if (cov < k) throw std::invalid_argument("point under-covered");
  }
  return inst;
}

bool is_k_cover(const LkcInstance& inst, const std::vector<int>& cover) {
  for (const Point& p : inst.points) {
    int cov = 0;
    for (int id : cover) {
      if (contains(inst.disks[id], p)) ++cov;
    }
    if (cov < inst.k) return false;
  }
  return true;
}

SkylineTuple skyline_at(const LkcInstance& inst, const std::vector<int>& cover, int point_index,
                        SkylineMode mode) {
  const Point& p = inst.points[point_index];
  std::vector<int> candidates;
  for (int id : cover) {
    const Disk& d = inst.disks[id];
    if (mode == SkylineMode::kCoveringOnly ? contains(d, p) : intersects_vertical(d, p.x)) {
      candidates.push_back(id);
    }
  }
  sort_by_dominance(inst, candidates, p.x);
  if (static_cast<int>(candidates.size()) > inst.k) candidates.resize(inst.k);
  return candidates;
}

std::vector<SkylineTuple> enumerate_tuples(const LkcInstance& inst, int point_index) {
  const Point& p = inst.points[point_index];
  std::vector<int> covering;
  for (int id = 0; id < inst.num_disks(); ++id) {
    if (contains(inst.disks[id], p)) covering.push_back(id);
  }
  sort_by_dominance(inst, covering, p.x);

  const int k = inst.k;
  std::vector<SkylineTuple> tuples;
  if (static_cast<int>(covering.size()) < k) return tuples;

  // Combinations of the dominance-sorted covering list are already in tuple
  // order, so each combination is emitted once, sorted.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(covering.size());
  while (true) {
    SkylineTuple t(k);
    for (int i = 0; i < k; ++i) t[i] = covering[idx[i]];
    tuples.push_back(std::move(t));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return tuples;
}

bool compatible(const LkcInstance& inst, const SkylineTuple& prev, const SkylineTuple& cur,
                int point_index) {
  std::vector<int> uni = cur;
  for (int id : prev) {
    if (std::find(uni.begin(), uni.end(), id) == uni.end()) uni.push_back(id);
  }
  sort_by_dominance(inst, uni, inst.points[point_index].x);
  for (size_t i = 0; i < cur.size(); ++i) {
    if (uni[i] != cur[i]) return false;
  }
  return true;
}

LkcSolution dp_solve(const LkcInstance& inst) {
  const int n = inst.num_points();
  if (n == 0) throw std::invalid_argument("no points");

  struct Cell {
    double cost = std::numeric_limits<double>::infinity();
    int prev = -1;  // index into the previous layer
  };

  std::vector<std::vector<SkylineTuple>> layers(n);
  std::vector<std::vector<Cell>> cells(n);

  for (int i = 0; i < n; ++i) {
    layers[i] = enumerate_tuples(inst, i);
    if (layers[i].empty()) throw std::invalid_argument("point under-covered");
    cells[i].resize(layers[i].size());
  }

  // Base: virtual all-dummy skyline at zero cost, compatible with everything,
  // so the first layer pays full tuple weight.
  for (size_t t = 0; t < layers[0].size(); ++t) {
    cells[0][t].cost = tuple_weight(inst, layers[0][t]);
  }

  for (int i = 1; i < n; ++i) {
    for (size_t t = 0; t < layers[i].size(); ++t) {
      const SkylineTuple& cur = layers[i][t];
      Cell& cell = cells[i][t];
      for (size_t s = 0; s < layers[i - 1].size(); ++s) {
        const double base = cells[i - 1][s].cost;
        if (!std::isfinite(base)) continue;
        const SkylineTuple& prev = layers[i - 1][s];
        if (!compatible(inst, prev, cur, i)) continue;
        const double cand = base + entering_weight(inst, prev, cur);
        if (cand < cell.cost) {
          cell.cost = cand;
          cell.prev = static_cast<int>(s);
        }
      }
    }
  }

  int best = -1;
  for (size_t t = 0; t < layers[n - 1].size(); ++t) {
    if (best < 0 || cells[n - 1][t].cost < cells[n - 1][best].cost) best = static_cast<int>(t);
  }
  if (best < 0 || !std::isfinite(cells[n - 1][best].cost)) {
    throw std::runtime_error("lkc dp found no feasible chain");
  }

  LkcSolution sol;
  sol.cost = cells[n - 1][best].cost;
  sol.skylines.assign(n, {});
  int at = best;
  for (int i = n - 1; i >= 0; --i) {
    sol.skylines[i] = layers[i][at];
    at = cells[i][at].prev;
  }
  std::vector<int> chosen;
  for (const SkylineTuple& t : sol.skylines) {
    for (int id : t) {
      if (id != kDummyDiskId) chosen.push_back(id);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  sol.chosen = std::move(chosen);

  if (!is_k_cover(inst, sol.chosen)) throw std::runtime_error("lkc dp output infeasible");
  return sol;
}

double startup_cost(const LkcInstance& inst, const std::vector<int>& cover, SkylineMode mode) {
  if (!is_k_cover(inst, cover)) throw std::invalid_argument("not a feasible cover");
  double cost = 0.0;
  SkylineTuple prev;
  for (int i = 0; i < inst.num_points(); ++i) {
    SkylineTuple sky = skyline_at(inst, cover, i, mode);
    cost += entering_weight(inst, prev, sky);
    prev = std::move(sky);
  }
  return cost;
}

std::vector<int> skyline_run_counts(const LkcInstance& inst, const std::vector<int>& cover,
                                   SkylineMode mode) {
  if (!is_k_cover(inst, cover)) throw std::invalid_argument("not a feasible cover");
  std::vector<int> runs(inst.num_disks(), 0);
  std::vector<char> prev_in(inst.num_disks(), 0);
  for (int i = 0; i < inst.num_points(); ++i) {
    const SkylineTuple sky = skyline_at(inst, cover, i, mode);
    std::vector<char> now_in(inst.num_disks(), 0);
    for (int id : sky) now_in[id] = 1;
    for (int d = 0; d < inst.num_disks(); ++d) {
      if (now_in[d] && !prev_in[d]) ++runs[d];
    }
    prev_in = std::move(now_in);
  }
  return runs;
}

}  // namespace geodom
