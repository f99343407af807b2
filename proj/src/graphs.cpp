#include "geodom/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geodom {

namespace {

void validate_dense_ids(const std::vector<Disk>& disks) {
  const int m = static_cast<int>(disks.size());
  std::vector<char> seen(m, 0);
  for (const Disk& d : disks) {
    if (d.id < 0 || d.id >= m || seen[d.id]) throw std::invalid_argument("malformed instance");
    if (!(d.radius > 0.0) || !(d.weight > 0.0)) throw std::invalid_argument("malformed instance");
    seen[d.id] = 1;
  }
  for (int i = 0; i < m; ++i) {
    if (disks[i].id != i) throw std::invalid_argument("malformed instance");
  }
}

std::vector<char> to_mask(int n, const std::vector<int>& u) {
  std::vector<char> mask(n, 0);
  for (int id : u) {
    if (id < 0 || id >= n) throw std::invalid_argument("id out of range");
    mask[id] = 1;
  }
  return mask;
}

}  // namespace

ContainmentGraph build_containment_graph(std::vector<Disk> disks) {
  validate_dense_ids(disks);
  const int m = static_cast<int>(disks.size());
  ContainmentGraph g;
  g.adj.assign(m, {});
  g.closed.assign(m, {});
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (contains(disks[u], disks[v].center) && contains(disks[v], disks[u].center)) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
      }
    }
  }
  for (int u = 0; u < m; ++u) {
    std::sort(g.adj[u].begin(), g.adj[u].end());
    g.closed[u] = g.adj[u];
    g.closed[u].insert(std::lower_bound(g.closed[u].begin(), g.closed[u].end(), u), u);
  }
  g.disks = std::move(disks);
  return g;
}

DirectedDiskGraph build_directed_graph(std::vector<Disk> disks) {
  validate_dense_ids(disks);
  const int m = static_cast<int>(disks.size());
  DirectedDiskGraph g;
  g.out_arcs.assign(m, {});
  g.in_arcs.assign(m, {});
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      if (contains(disks[u], disks[v].center)) {
        g.out_arcs[u].push_back(v);
        g.in_arcs[v].push_back(u);
      }
    }
  }
  g.disks = std::move(disks);
  return g;
}

bool is_dominating(const ContainmentGraph& g, const std::vector<int>& u) {
  const auto mask = to_mask(g.size(), u);
  for (int v = 0; v < g.size(); ++v) {
    if (mask[v]) continue;
    bool covered = false;
    for (int w : g.adj[v]) {
      if (mask[w]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_strongly_dominating(const DirectedDiskGraph& g, const std::vector<int>& u) {
  const auto mask = to_mask(g.size(), u);
  for (int v = 0; v < g.size(); ++v) {
    if (mask[v]) continue;
    bool has_out = false;
    for (int w : g.out_arcs[v]) {
      if (mask[w]) {
        has_out = true;
        break;
      }
    }
    if (!has_out) return false;
    bool has_in = false;
    for (int w : g.in_arcs[v]) {
      if (mask[w]) {
        has_in = true;
        break;
      }
    }
    if (!has_in) return false;
  }
  return true;
}

std::vector<int> prune_redundant(const std::vector<Disk>& disks, std::vector<int> u,
                                 const std::function<bool(const std::vector<int>&)>& feasible) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (!feasible(u)) throw std::invalid_argument("not a feasible solution");

  std::vector<int> order = u;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (disks[a].weight != disks[b].weight) return disks[a].weight > disks[b].weight;
    return a > b;
  });

  for (int cand : order) {
    std::vector<int> trial;
    trial.reserve(u.size() - 1);
    for (int id : u) {
      if (id != cand) trial.push_back(id);
    }
    if (feasible(trial)) u = std::move(trial);
  }
  return u;
}

bool is_restricted_dominating(const ContainmentGraph& g, const std::vector<int>& r) {
  const auto mask = to_mask(g.size(), r);
  for (int v = 0; v < g.size(); ++v) {
    if (mask[v]) continue;
    bool ok = false;
    for (int w : g.adj[v]) {
      if (mask[w] && g.disks[w].radius >= g.disks[v].radius) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

RestrictedDominatingSet restrict_dominating_set(const ContainmentGraph& g, std::vector<int> u) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (!is_dominating(g, u)) throw std::invalid_argument("not a feasible solution");

  std::set<int> result(u.begin(), u.end());
  RestrictedDominatingSet out;
  out.r_u_sizes.reserve(u.size());

  for (int center : u) {
    const Disk& du = g.disks[center];
    std::vector<int> vu;  // candidates with radius at least r_u inside D_u
    for (int v = 0; v < g.size(); ++v) {
      if (g.disks[v].radius >= du.radius && contains(du, g.disks[v].center)) vu.push_back(v);
    }

    // adjacency restricted to V_u; w restrictedly dominates v when they are
    // containment-graph neighbors and r_w >= r_v
    auto dominates = [&](int w, int v) {
      if (w == v) return true;
      if (g.disks[w].radius < g.disks[v].radius) return false;
      return std::binary_search(g.adj[w].begin(), g.adj[w].end(), v);
    };

    std::vector<int> ru = vu;
    std::vector<int> scan = vu;
    std::sort(scan.begin(), scan.end(), [&](int a, int b) {
      if (g.disks[a].radius != g.disks[b].radius) return g.disks[a].radius < g.disks[b].radius;
      return a < b;
    });

    bool deleted = true;
    while (deleted) {
      deleted = false;
      for (int cand : scan) {
        auto it = std::find(ru.begin(), ru.end(), cand);
        if (it == ru.end()) continue;
        std::vector<int> trial;
        trial.reserve(ru.size() - 1);
        for (int id : ru) {
          if (id != cand) trial.push_back(id);
        }
        bool all_ok = true;
        for (int v : vu) {
          bool ok = false;
          for (int w : trial) {
            if (dominates(w, v)) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            all_ok = false;
            break;
          }
        }
        if (all_ok) {
          ru = std::move(trial);
          deleted = true;
          break;
        }
      }
    }

    out.r_u_sizes.push_back(static_cast<int>(ru.size()));
    result.insert(ru.begin(), ru.end());
  }

  out.ids.assign(result.begin(), result.end());
  return out;
}

}  // namespace geodom
