#pragma once

#include <cstdint>

#include "geodom/instance.hpp"

namespace geodom {

struct GenParams {
  ProblemKind kind = ProblemKind::kMwds;
  int num_disks = 10;
  int num_points = 8;   // lkc only
  int k = 1;            // lkc only
  double density = 2.0; // expected crowding; higher means denser graphs
  double radius_min = 0.5;
  double radius_max = 1.5;
  double weight_min = 1.0;
  double weight_max = 10.0;
  std::uint64_t seed = 1;
};

// Reproducible per seed. For lkc, centers land strictly above y = 0 and
// points on or below it; K-coverage is ensured by rejection resampling
// (at most 1000 attempts, then an error).
Instance generate(const GenParams& params);

}  // namespace geodom
