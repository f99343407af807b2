#pragma once

#include <string>
#include <vector>

#include "geodom/geometry.hpp"
#include "geodom/lkc.hpp"

namespace geodom {

enum class ProblemKind { kMwds, kMsds, kLkc };

std::string problem_name(ProblemKind kind);
ProblemKind problem_from_name(const std::string& name);

// Line-oriented instance file:
//   problem mwds|msds|lkc
//   disks <m>
//   x y r w            (m lines)
// and for lkc additionally:
//   points <n>
//   x y                (n lines)
//   k <K>
// '#' starts a comment, blank lines are skipped. Disk ids are assigned in
// file order.
struct Instance {
  ProblemKind problem = ProblemKind::kMwds;
  std::vector<Disk> disks;
  std::vector<Point> points;  // lkc only
  int k = 0;                  // lkc only

  friend bool operator==(const Instance&, const Instance&);
};

// Throws std::invalid_argument with "line N: reason" on any violation.
Instance parse_instance(const std::string& text);

// Canonical text form; doubles are printed with 17 significant digits so the
// round trip is exact.
std::string write_instance(const Instance& inst);

// FNV-1a over the canonical text, as a 16-hex-digit string.
std::string instance_digest(const Instance& inst);

LkcInstance to_lkc(const Instance& inst);

}  // namespace geodom
