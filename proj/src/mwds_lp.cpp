#include "geodom/mwds_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geodom/simplex.hpp"

namespace geodom {

long long DiskMultiset::total_elements() const {
  long long total = 0;
  for (long long c : counts) total += c;
  return total;
}

double DiskMultiset::total_weight(const std::vector<Disk>& disks) const {
  double w = 0.0;
  for (size_t i = 0; i < counts.size(); ++i) w += static_cast<double>(counts[i]) * disks[i].weight;
  return w;
}

std::vector<int> DiskMultiset::support() const {
  std::vector<int> ids;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) ids.push_back(static_cast<int>(i));
  }
  return ids;
}

LpSolution solve_lp_relaxation(const ContainmentGraph& g) {
  const int m = g.size();
  if (m == 0) throw std::invalid_argument("empty instance");

  // The covering LP is solved through its packing dual
  //   max 1^T y  s.t.  M y <= c,  y >= 0
  // with M the (symmetric) closed-neighborhood incidence matrix. The slack
  // basis is feasible because weights are positive, and the covering optimum
  // falls out of the slack reduced costs.
  std::vector<std::vector<double>> mat(m, std::vector<double>(m, 0.0));
  for (int d = 0; d < m; ++d) {
    for (int a : g.closed[d]) mat[d][a] = 1.0;
  }
  std::vector<double> weights(m), ones(m, 1.0);
  for (int d = 0; d < m; ++d) weights[d] = g.disks[d].weight;

  SimplexResult sr = solve_packing_lp(mat, weights, ones);

  LpSolution sol;
  sol.x = sr.dual;
  for (double& v : sol.x) {
    if (v < 0.0) v = 0.0;
    if (std::abs(v) < kGeoEps) v = 0.0;
    if (std::abs(v - 1.0) < kGeoEps) v = 1.0;
  }

  // Scale up if rounding left any coverage constraint marginally below 1, so
  // the multiset facts downstream hold without per-call slack.
  double min_cov = std::numeric_limits<double>::infinity();
  for (int d = 0; d < m; ++d) {
    double cov = 0.0;
    for (int a : g.closed[d]) cov += sol.x[a];
    min_cov = std::min(min_cov, cov);
  }
  if (min_cov <= 0.0) throw std::runtime_error("lp solver produced infeasible point");
  if (min_cov < 1.0) {
    if (min_cov < 1.0 - kLpEps) throw std::runtime_error("lp solver produced infeasible point");
    for (double& v : sol.x) v /= min_cov;
  }

  sol.objective = 0.0;
  for (int d = 0; d < m; ++d) sol.objective += weights[d] * sol.x[d];
  if (std::abs(sol.objective - sr.objective) > kLpEps * std::max(1.0, std::abs(sr.objective))) {
    throw std::runtime_error("lp duality gap");
  }
  return sol;
}

DiskMultiset round_to_multiset(const LpSolution& sol, long long n) {
  DiskMultiset ms;
  ms.counts.resize(sol.x.size());
  for (size_t d = 0; d < sol.x.size(); ++d) {
    ms.counts[d] = static_cast<long long>(std::floor(2.0 * static_cast<double>(n) * sol.x[d]));
  }
  return ms;
}

long long multiplicity(const DiskMultiset& ms, const ContainmentGraph& g, int id) {
  long long total = 0;
  for (int a : g.closed[id]) total += ms.counts[a];
  return total;
}

}  // namespace geodom
