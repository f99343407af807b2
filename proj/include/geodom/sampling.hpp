#pragma once

#include <cstdint>
#include <vector>

#include "geodom/mwds_lp.hpp"
#include "geodom/rng.hpp"

namespace geodom {

// Group of target disks dominated by exactly the same multiset elements.
// Copies of a disk dominate identical targets, so the class key reduces to
// the sorted set of distinct dominator ids; multiplicity counts copies.
struct EquivalenceClass {
  std::vector<int> dominator_ids;  // sorted, distinct, counts > 0
  long long multiplicity = 0;      // sum of copy counts over dominator_ids
  std::vector<int> member_ids;     // targets in the class, sorted
  int representative = -1;         // smallest member id
};

struct SamplingConfig {
  double c = 4.0;         // selection-probability constant
  double c_prime = 32.0;  // class-count constant (diagnostic bound)
  std::uint64_t seed = 0;
  long long stop_threshold = 2;  // below this L the driver keeps everything
};

// One entry of the processing sequence sigma; copies of a disk are distinct
// elements and are sampled independently.
struct MultisetElement {
  int disk_id = 0;
  int copy = 0;

  friend bool operator==(const MultisetElement&, const MultisetElement&) = default;
};

struct SamplingTrace {
  struct ElementRecord {
    int disk_id = 0;
    int copy = 0;
    long long bucket_l = 0;
    bool selected = false;
    bool forced = false;
    double prob = 0.0;
  };
  struct BucketRecord {
    long long l = 0;
    long long class_count = 0;
  };
  std::vector<ElementRecord> elements;
  std::vector<BucketRecord> buckets;
};

struct SamplingPassResult {
  std::vector<MultisetElement> sigma;
  std::vector<char> selected;  // parallel to sigma
  std::vector<char> forced;
  std::vector<double> prob_used;
};

long long floor_log2(long long v);
long long ceil_log2(long long v);

// Iterations of floor(log2 .) until the value drops to 1 or below.
int log_star2(long long n);

// One class per distinct dominator set among `targets`; classes whose
// multiplicity exceeds max_mult are dropped.
std::vector<EquivalenceClass> equivalence_classes(const DiskMultiset& dominators,
                                                  const std::vector<int>& targets,
                                                  const ContainmentGraph& g, long long max_mult);

// Smallest-last style ordering: repeatedly remove the element whose disk
// dominates the fewest classes that are live (remaining multiplicity at most
// 2L), ties by smaller (disk id, copy). sigma is the reverse removal order.
// live_dominated_out, when given, records per removal step how many live
// classes the removed element dominated.
std::vector<MultisetElement> build_sigma(const DiskMultiset& dominators,
                                         const std::vector<EquivalenceClass>& classes,
                                         long long l_param,
                                         std::vector<long long>* live_dominated_out = nullptr);

// Single bucket pass (classes with multiplicity in [L, 2L)). Walks sigma in
// order; an element is forced for a class when the selections so far plus the
// dominators still ahead cannot reach ceil(log2 L); otherwise it is selected
// with probability min(1, c log2 L / L). sigma_classes, when given, is the
// full class list used only to build sigma.
SamplingPassResult uniform_sampling_pass(const DiskMultiset& dominators,
                                         const std::vector<EquivalenceClass>& bucket,
                                         long long l_param, const SamplingConfig& cfg,
                                         SplitMix64& rng,
                                         const std::vector<EquivalenceClass>* sigma_classes = nullptr);

// Buckets [L*2^j, L*2^(j+1)) over all targets of g, one pass per nonempty
// bucket, union of the selections. Requires every disk to be L-dominated.
DiskMultiset uniform_sampling_process(const DiskMultiset& dominators, const ContainmentGraph& g,
                                      long long l_param, const SamplingConfig& cfg, SplitMix64& rng,
                                      SamplingTrace* trace = nullptr);

// LP rounding, log*-many sampling rounds, then redundancy pruning.
std::vector<int> iterated_mwds(const ContainmentGraph& g, const SamplingConfig& cfg,
                               SplitMix64& rng, SamplingTrace* trace = nullptr);

}  // namespace geodom
