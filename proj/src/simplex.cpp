#include "geodom/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geodom {

namespace {
constexpr double kPivotEps = 1e-9;
}

SimplexResult solve_packing_lp(const std::vector<std::vector<double>>& a,
                               const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (m == 0 || n == 0) throw std::invalid_argument("empty lp");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("ragged lp matrix");
    if (b[i] < 0.0) throw std::invalid_argument("negative rhs");
  }

  // Tableau rows: m constraints plus the objective row. Columns: n structural
  // variables, m slacks, rhs.
  const int cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
  }
  for (int j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  SimplexResult res;
  const int bland_after = 50 * (m + n);
  while (true) {
    // Entering column: Dantzig rule, with Bland's rule once the iteration
    // count suggests cycling on degenerate pivots.
    int enter = -1;
    if (res.iterations < bland_after) {
      double best = -kPivotEps;
      for (int j = 0; j < n + m; ++j) {
        if (t[m][j] < best) {
          best = t[m][j];
          enter = j;
        }
      }
    } else {
      for (int j = 0; j < n + m; ++j) {
        if (t[m][j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
    }
    if (enter < 0) break;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best_ratio - kPivotEps ||
            (ratio < best_ratio + kPivotEps && (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("lp unbounded");

    const double piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++res.iterations;
    if (res.iterations > 200000) throw std::runtime_error("lp iteration limit");
  }

  res.y.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) res.y[basis[i]] = t[i][cols - 1];
  }
  res.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) res.dual[i] = t[m][n + i];
  res.objective = t[m][cols - 1];
  return res;
}

}  // namespace geodom
