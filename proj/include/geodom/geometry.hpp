#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace geodom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A weighted disk. Ids are dense 0..m-1 within an instance; the reserved id
// kDummyDiskId marks the zero-weight dummy used by the linear K-cover sweep.
struct Disk {
  int id = 0;
  Point center;
  double radius = 1.0;
  double weight = 1.0;
};

inline constexpr int kDummyDiskId = -1;

// Tolerance for point-in-disk tests, applied to the squared distance. Every
// feasibility check in the library (graphs, covers, oracles) goes through
// contains() so they cannot disagree on boundary points.
inline constexpr double kGeoEps = 1e-9;

inline Disk dummy_disk() { return Disk{kDummyDiskId, {0.0, 0.0}, 0.0, 0.0}; }

inline bool is_dummy(const Disk& d) { return d.id == kDummyDiskId; }

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline bool contains(const Disk& d, const Point& p) {
  if (is_dummy(d)) return false;  // the dummy covers nothing
  return squared_distance(d.center, p) <= d.radius * d.radius * (1.0 + kGeoEps);
}

inline bool intersects_vertical(const Disk& d, double x_line) {
  if (is_dummy(d)) return true;  // a half-plane meets every vertical line
  const double dx = x_line - d.center.x;
  return dx * dx <= d.radius * d.radius;
}

// y-coordinate of the lowest point of d on the vertical line x = x_line.
// Absent when the line misses the disk. The dummy reports +inf so that it
// sorts after every real disk on the line.
inline std::optional<double> chord_low(const Disk& d, double x_line) {
  if (is_dummy(d)) return std::numeric_limits<double>::infinity();
  const double dx = x_line - d.center.x;
  const double h2 = d.radius * d.radius - dx * dx;
  if (h2 < 0.0) return std::nullopt;
  return d.center.y - std::sqrt(h2);
}

// Strict total order among disks intersecting the line x = x_line:
//   1) a disk on the line precedes one that misses it;
//   2) lower chord endpoint first;
//   3) chord tie: smaller center.x first;
//   4) full tie: smaller id first.
// Usable directly as a std::sort comparator; disks missing the line are
// ordered by id among themselves (they never reach a skyline).
inline bool line_order(const Disk& a, const Disk& b, double x_line) {
  const auto la = chord_low(a, x_line);
  const auto lb = chord_low(b, x_line);
  if (la.has_value() != lb.has_value()) return la.has_value();
  if (!la.has_value()) return a.id < b.id;
  if (*la != *lb) return *la < *lb;
  if (a.center.x != b.center.x) return a.center.x < b.center.x;
  return a.id < b.id;
}

// Three-case line dominance. Requires the dominator to intersect the line.
inline bool line_dominates(const Disk& d1, const Disk& d2, double x_line) {
  if (!intersects_vertical(d1, x_line)) throw std::invalid_argument("dominator off line");
  if (!intersects_vertical(d2, x_line)) return true;  // case 1
  return line_order(d1, d2, x_line);                  // cases 2 and 3 + id tie
}

}  // namespace geodom
