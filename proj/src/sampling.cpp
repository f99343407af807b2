#include "geodom/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace geodom {

long long floor_log2(long long v) {
  if (v <= 0) throw std::invalid_argument("log of non-positive value");
  long long r = -1;
  while (v > 0) {
    v >>= 1;
    ++r;
  }
  return r;
}

long long ceil_log2(long long v) {
  if (v <= 0) throw std::invalid_argument("log of non-positive value");
  if (v == 1) return 0;
  return floor_log2(v - 1) + 1;
}

int log_star2(long long n) {
  if (n <= 0) throw std::invalid_argument("log* of non-positive value");
  int t = 0;
  while (n > 1) {
    n = floor_log2(n);
    ++t;
  }
  return t;
}

std::vector<EquivalenceClass> equivalence_classes(const DiskMultiset& dominators,
                                                  const std::vector<int>& targets,
                                                  const ContainmentGraph& g, long long max_mult) {
  std::map<std::vector<int>, EquivalenceClass> by_key;
  for (int t : targets) {
    std::vector<int> key;
    long long mult = 0;
    for (int a : g.closed[t]) {
      if (dominators.counts[a] > 0) {
        key.push_back(a);
        mult += dominators.counts[a];
      }
    }
    auto [it, inserted] = by_key.try_emplace(key);
    EquivalenceClass& ec = it->second;
    if (inserted) {
      ec.dominator_ids = key;
      ec.multiplicity = mult;
      ec.representative = t;
    }
    ec.member_ids.push_back(t);
    ec.representative = std::min(ec.representative, t);
  }

  std::vector<EquivalenceClass> classes;
  for (auto& [key, ec] : by_key) {
    if (ec.multiplicity > max_mult) continue;
    std::sort(ec.member_ids.begin(), ec.member_ids.end());
    classes.push_back(std::move(ec));
  }
  return classes;
}

namespace {

std::vector<MultisetElement> expand_elements(const DiskMultiset& ms) {
  std::vector<MultisetElement> elems;
  for (size_t d = 0; d < ms.counts.size(); ++d) {
    for (long long c = 0; c < ms.counts[d]; ++c) {
      elems.push_back({static_cast<int>(d), static_cast<int>(c)});
    }
  }
  return elems;  // already sorted by (disk_id, copy)
}

}  // namespace

std::vector<MultisetElement> build_sigma(const DiskMultiset& dominators,
                                         const std::vector<EquivalenceClass>& classes,
                                         long long l_param,
                                         std::vector<long long>* live_dominated_out) {
  const long long live_cap = 2 * l_param;
  std::vector<MultisetElement> elems = expand_elements(dominators);
  const int n_elems = static_cast<int>(elems.size());
  const int n_classes = static_cast<int>(classes.size());

  // per-class multiplicity within the not-yet-removed elements
  std::vector<long long> class_mult(n_classes, 0);
  std::vector<std::vector<int>> classes_of_disk(dominators.counts.size());
  for (int c = 0; c < n_classes; ++c) {
    class_mult[c] = classes[c].multiplicity;
    for (int d : classes[c].dominator_ids) classes_of_disk[d].push_back(c);
  }

  std::vector<char> removed(n_elems, 0);
  std::vector<MultisetElement> removal_order;
  removal_order.reserve(n_elems);
  if (live_dominated_out) live_dominated_out->clear();

  for (int step = 0; step < n_elems; ++step) {
    int best = -1;
    long long best_count = -1;
    for (int e = 0; e < n_elems; ++e) {
      if (removed[e]) continue;
      long long cnt = 0;
      for (int c : classes_of_disk[elems[e].disk_id]) {
        if (class_mult[c] <= live_cap && class_mult[c] > 0) ++cnt;
      }
      if (best < 0 || cnt < best_count) {
        best = e;
        best_count = cnt;
      }
    }
    removed[best] = 1;
    removal_order.push_back(elems[best]);
    if (live_dominated_out) live_dominated_out->push_back(best_count);
    for (int c : classes_of_disk[elems[best].disk_id]) --class_mult[c];
  }

  std::reverse(removal_order.begin(), removal_order.end());
  return removal_order;
}

SamplingPassResult uniform_sampling_pass(const DiskMultiset& dominators,
                                         const std::vector<EquivalenceClass>& bucket,
                                         long long l_param, const SamplingConfig& cfg,
                                         SplitMix64& rng,
                                         const std::vector<EquivalenceClass>* sigma_classes) {
  if (l_param < 2) throw std::invalid_argument("sampling pass needs L >= 2");
  const long long target = ceil_log2(l_param);
  const double prob = std::min(1.0, cfg.c * std::log2(static_cast<double>(l_param)) /
                                        static_cast<double>(l_param));

  SamplingPassResult res;
  res.sigma = build_sigma(dominators, sigma_classes ? *sigma_classes : bucket, l_param);
  const int n_elems = static_cast<int>(res.sigma.size());
  res.selected.assign(n_elems, 0);
  res.forced.assign(n_elems, 0);
  res.prob_used.assign(n_elems, 0.0);

  const int n_classes = static_cast<int>(bucket.size());
  std::vector<std::vector<int>> classes_of_disk(dominators.counts.size());
  std::vector<long long> ahead(n_classes, 0);  // dominators of the class not yet processed
  std::vector<long long> chosen(n_classes, 0);
  for (int c = 0; c < n_classes; ++c) {
    for (int d : bucket[c].dominator_ids) classes_of_disk[d].push_back(c);
    ahead[c] = bucket[c].multiplicity;
    if (ahead[c] < target) throw std::runtime_error("infeasible bucket");
  }

  for (int i = 0; i < n_elems; ++i) {
    const int disk = res.sigma[i].disk_id;
    const auto& cls = classes_of_disk[disk];
    for (int c : cls) --ahead[c];  // this element is no longer "strictly after i"

    bool involved = !cls.empty();
    bool forced = false;
    for (int c : cls) {
      if (chosen[c] + ahead[c] < target) {
        forced = true;
        break;
      }
    }

    bool take = false;
    if (forced) {
      take = true;
    } else if (involved) {
      res.prob_used[i] = prob;
      take = rng.next_bernoulli(prob);
    }
    if (take) {
      res.selected[i] = 1;
      res.forced[i] = forced ? 1 : 0;
      for (int c : cls) ++chosen[c];
    }
  }

  // The forced rule makes the coverage guarantee deterministic; check it.
  for (int c = 0; c < n_classes; ++c) {
    if (chosen[c] < target) throw std::runtime_error("sampling pass missed coverage target");
  }
  return res;
}

DiskMultiset uniform_sampling_process(const DiskMultiset& dominators, const ContainmentGraph& g,
                                      long long l_param, const SamplingConfig& cfg, SplitMix64& rng,
                                      SamplingTrace* trace) {
  if (l_param < 2) throw std::invalid_argument("sampling process needs L >= 2");
  std::vector<int> targets(g.size());
  for (int i = 0; i < g.size(); ++i) targets[i] = i;
  for (int t : targets) {
    if (multiplicity(dominators, g, t) < l_param) {
      throw std::invalid_argument("disk not L-dominated by input multiset");
    }
  }

  const auto all_classes =
      equivalence_classes(dominators, targets, g, std::numeric_limits<long long>::max());

  DiskMultiset out;
  out.counts.assign(dominators.counts.size(), 0);
  std::map<std::pair<int, int>, char> element_taken;

  for (long long bucket_lo = l_param; !all_classes.empty(); bucket_lo *= 2) {
    std::vector<EquivalenceClass> bucket;
    bool any_higher = false;
    for (const auto& ec : all_classes) {
      if (ec.multiplicity >= bucket_lo && ec.multiplicity < 2 * bucket_lo) bucket.push_back(ec);
      if (ec.multiplicity >= 2 * bucket_lo) any_higher = true;
    }
    if (!bucket.empty()) {
      SamplingPassResult pass =
          uniform_sampling_pass(dominators, bucket, bucket_lo, cfg, rng, &all_classes);
      for (size_t i = 0; i < pass.sigma.size(); ++i) {
        if (trace) {
          trace->elements.push_back({pass.sigma[i].disk_id, pass.sigma[i].copy, bucket_lo,
                                     pass.selected[i] != 0, pass.forced[i] != 0,
                                     pass.prob_used[i]});
        }
        if (pass.selected[i]) {
          element_taken[{pass.sigma[i].disk_id, pass.sigma[i].copy}] = 1;
        }
      }
      if (trace) trace->buckets.push_back({bucket_lo, static_cast<long long>(bucket.size())});
    }
    if (!any_higher) break;
  }

  for (const auto& [key, taken] : element_taken) {
    if (taken) ++out.counts[key.first];
  }
  return out;
}

std::vector<int> iterated_mwds(const ContainmentGraph& g, const SamplingConfig& cfg,
                               SplitMix64& rng, SamplingTrace* trace) {
  const long long n = g.size();
  if (n == 0) throw std::invalid_argument("empty instance");

  LpSolution lp = solve_lp_relaxation(g);
  DiskMultiset current = round_to_multiset(lp, n);

  long long l = n;  // L_1 = n
  const int budget = log_star2(n);
  for (int iter = 0; iter < budget && l > cfg.stop_threshold; ++iter) {
    current = uniform_sampling_process(current, g, l, cfg, rng, trace);
    l = floor_log2(l);
  }

  std::vector<int> ids = current.support();
  return prune_redundant(g.disks, std::move(ids),
                         [&](const std::vector<int>& u) { return is_dominating(g, u); });
}

}  // namespace geodom
