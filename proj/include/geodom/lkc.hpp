#pragma once

#include <vector>

#include "geodom/geometry.hpp"

namespace geodom {

// Linear K-cover instance: disk centers strictly above y = 0, points on or
// below it, every point covered by at least K disks. Points are kept sorted
// by x; exact ties are separated by an index-scaled nudge so the left-to-right
// sweep order is strict.
struct LkcInstance {
  std::vector<Disk> disks;
  std::vector<Point> points;
  int k = 1;

  int num_points() const { return static_cast<int>(points.size()); }
  int num_disks() const { return static_cast<int>(disks.size()); }
};

inline constexpr double kTieEps = 1e-9;

// Validates geometry and the K-coverage precheck, normalizes point order.
LkcInstance make_lkc_instance(std::vector<Disk> disks, std::vector<Point> points, int k);

// Whether every point lies in at least K disks of `cover`.
bool is_k_cover(const LkcInstance& inst, const std::vector<int>& cover);

// Ordered K-tuple of disk ids; the order is the line-dominance order at the
// point where the tuple lives, so a tuple is its own skyline. kDummyDiskId
// entries appear only in the virtual base state before the first point.
using SkylineTuple = std::vector<int>;

enum class SkylineMode {
  kAllOnLine,     // skyline over every cover disk meeting the vertical line
  kCoveringOnly,  // restrict candidates to disks that cover the point
};

// K lowest disks of `cover` at points[point_index] in dominance order.
SkylineTuple skyline_at(const LkcInstance& inst, const std::vector<int>& cover, int point_index,
                        SkylineMode mode = SkylineMode::kAllOnLine);

// All dominance-sorted K-tuples of distinct disks covering the point.
std::vector<SkylineTuple> enumerate_tuples(const LkcInstance& inst, int point_index);

// True when cur is exactly the K lowest of prev union cur at the point.
bool compatible(const LkcInstance& inst, const SkylineTuple& prev, const SkylineTuple& cur,
                int point_index);

struct LkcSolution {
  double cost = 0.0;                  // DP objective (re-entries charged again)
  std::vector<int> chosen;            // union of the skyline chain, sorted
  std::vector<SkylineTuple> skylines; // one tuple per point
};

// Startup-cost dynamic program over skyline tuples.
LkcSolution dp_solve(const LkcInstance& inst);

// Left-to-right sweep cost of a fixed cover: a disk's weight is charged each
// time it enters the skyline, the first appearance included.
double startup_cost(const LkcInstance& inst, const std::vector<int>& cover,
                    SkylineMode mode = SkylineMode::kAllOnLine);

// Number of maximal runs of consecutive skyline membership per disk over
// the left-to-right point sweep.
std::vector<int> skyline_run_counts(const LkcInstance& inst, const std::vector<int>& cover,
                                   SkylineMode mode = SkylineMode::kAllOnLine);

}  // namespace geodom
