#pragma once

#include <functional>
#include <vector>

#include "geodom/geometry.hpp"

namespace geodom {

// Undirected disk containment graph: edge {u,v} iff each disk contains the
// other's center. Closed neighborhoods (node included) are stored separately
// because every domination constraint in the library is taken over N[D].
struct ContainmentGraph {
  std::vector<Disk> disks;
  std::vector<std::vector<int>> adj;     // open neighborhoods, sorted
  std::vector<std::vector<int>> closed;  // adj + the node itself, sorted

  int size() const { return static_cast<int>(disks.size()); }
};

// Directed disk graph: arc u->v iff D_u contains v's center. No self-loops.
struct DirectedDiskGraph {
  std::vector<Disk> disks;
  std::vector<std::vector<int>> out_arcs;
  std::vector<std::vector<int>> in_arcs;

  int size() const { return static_cast<int>(disks.size()); }
};

ContainmentGraph build_containment_graph(std::vector<Disk> disks);
DirectedDiskGraph build_directed_graph(std::vector<Disk> disks);

bool is_dominating(const ContainmentGraph& g, const std::vector<int>& u);
bool is_strongly_dominating(const DirectedDiskGraph& g, const std::vector<int>& u);

// Removes elements until the solution is 1-minimal under `feasible`.
// Candidates are scanned in strictly decreasing weight, ties broken by
// decreasing id; a single pass suffices because feasibility is monotone.
std::vector<int> prune_redundant(const std::vector<Disk>& disks, std::vector<int> u,
                                 const std::function<bool(const std::vector<int>&)>& feasible);

struct RestrictedDominatingSet {
  std::vector<int> ids;        // R, sorted
  std::vector<int> r_u_sizes;  // |R_u| per element of U (input order after sorting)
};

// Expands a dominating set U into a restricted dominating set R >= U where
// every node has a dominator of no smaller radius. For each u the candidate
// set V_u = {v inside D_u : r_v >= r_u} is whittled down greedily (smallest
// radius first, ties by id) while V_u stays restrictedly dominated.
RestrictedDominatingSet restrict_dominating_set(const ContainmentGraph& g, std::vector<int> u);

// Definition-level check used by tests and by solver output validation.
bool is_restricted_dominating(const ContainmentGraph& g, const std::vector<int>& r);

}  // namespace geodom
