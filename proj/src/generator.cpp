#include "geodom/generator.hpp"

#include <cmath>
#include <stdexcept>

#include "geodom/rng.hpp"

namespace geodom {

namespace {

Disk sample_disk(SplitMix64& rng, int id, double side, const GenParams& p) {
  Disk d;
  d.id = id;
  d.center.x = rng.next_range(0.0, side);
  d.center.y = rng.next_range(0.0, side);
  d.radius = rng.next_range(p.radius_min, p.radius_max);
  d.weight = rng.next_range(p.weight_min, p.weight_max);
  return d;
}

}  // namespace

Instance generate(const GenParams& p) {
  if (p.num_disks <= 0 || p.density <= 0.0 || p.radius_min <= 0.0 ||
      p.radius_max < p.radius_min || p.weight_min <= 0.0 || p.weight_max < p.weight_min) {
    throw std::invalid_argument("invalid generator parameters");
  }
  SplitMix64 rng(p.seed);
  const double r_mean = 0.5 * (p.radius_min + p.radius_max);

  Instance inst;
  inst.problem = p.kind;

  if (p.kind == ProblemKind::kMwds || p.kind == ProblemKind::kMsds) {
    // Square side chosen so the expected degree tracks `density`.
    const double side =
        r_mean * std::sqrt(3.14159265358979323846 * p.num_disks / p.density);
    for (int i = 0; i < p.num_disks; ++i) inst.disks.push_back(sample_disk(rng, i, side, p));
    return inst;
  }

  if (p.num_points <= 0 || p.k <= 0) throw std::invalid_argument("invalid generator parameters");

  // Disks strung along a strip above y = 0, dipping below it; points under
  // the line, resampled until each is K-covered.
  const double width = std::max(r_mean, 0.8 * p.num_disks * r_mean / p.density);
  for (int i = 0; i < p.num_disks; ++i) {
    Disk d;
    d.id = i;
    d.center.x = rng.next_range(0.0, width);
    d.radius = rng.next_range(p.radius_min, p.radius_max);
    d.center.y = rng.next_range(0.05 * d.radius, 0.6 * d.radius);
    d.weight = rng.next_range(p.weight_min, p.weight_max);
    inst.disks.push_back(d);
  }
  const double depth = 0.35 * p.radius_min;
  for (int i = 0; i < p.num_points; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Point pt{rng.next_range(0.0, width), -rng.next_range(0.0, depth)};
      int cov = 0;
      for (const Disk& d : inst.disks) {
        if (contains(d, pt)) ++cov;
      }
      if (cov >= p.k) {
        inst.points.push_back(pt);
        placed = true;
        break;
      }
    }
    if (!placed) throw std::runtime_error("generator could not reach k-feasibility");
  }
  inst.k = p.k;
  return inst;
}

}  // namespace geodom
