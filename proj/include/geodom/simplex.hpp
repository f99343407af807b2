#pragma once

#include <vector>

namespace geodom {

// Dense tableau simplex for packing LPs:
//
//   max  c^T y   s.t.  A y <= b,  y >= 0,  with b >= 0.
//
// The all-slack basis is feasible, so no phase-1 is needed. At optimality the
// reduced costs of the slack columns are the optimal duals, i.e. the optimal
// solution of the covering LP  min b^T x  s.t.  A^T x >= c,  x >= 0.
struct SimplexResult {
  std::vector<double> y;     // primal (packing) solution
  std::vector<double> dual;  // covering solution read off the slack columns
  double objective = 0.0;
  int iterations = 0;
};

SimplexResult solve_packing_lp(const std::vector<std::vector<double>>& a,
                               const std::vector<double>& b, const std::vector<double>& c);

}  // namespace geodom
