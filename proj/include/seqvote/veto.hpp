#pragma once

#include <optional>
#include <vector>

#include "seqvote/election.hpp"

namespace seqvote {

// Exact subset-sum queries over a multiset of nonnegative integers, via
// branch and bound over duplicate-grouped items (largest first, take-all and
// bound pruning). No pseudo-polynomial table: item values may be huge.
class WeightSet {
 public:
  explicit WeightSet(std::vector<Big> weights);  // BadPartitionInput if negative
  const Big& total() const { return total_; }
  // Largest achievable subset sum <= cap; nullopt iff cap < 0.
  std::optional<Big> max_sum_at_most(const Big& cap) const;
  // Smallest achievable subset sum >= lo; nullopt iff lo > total.
  std::optional<Big> min_sum_at_least(const Big& lo) const;
  // Is some subset sum inside [lo, hi]?
  bool any_sum_in(const Big& lo, const Big& hi) const;

 private:
  std::vector<std::pair<Big, int>> groups_;  // value desc, multiplicity
  std::vector<Big> suffix_;                  // total from group i on
  Big total_ = 0;
};

struct CoveringInstance {
  std::vector<Big> weights;
  std::vector<Big> demands;
};

// Can the weights be split into disjoint groups covering every demand
// (group j sums to at least demands[j])? Weights may go unused; zero
// demands are already met; negative values are rejected
// (BadPartitionInput). Exact.
bool partition_feasible(const std::vector<Big>& weights,
                        const std::vector<Big>& demands);

// Least t >= 0 with partition_feasible(weights, {max(ms - t, 0) ...}).
// Feasibility is monotone in t, which the search asserts. Two demands take a
// closed form around the demand crossing point; other sizes binary-search.
Big min_threshold(const std::vector<Big>& weights,
                  const std::vector<Big>& maxscores);

// Weighted constructive veto (nonunique winners, segment goal), decided by
// comparing two thresholds: what the manipulators can force every hated
// candidate's score down to versus what the nonmanipulators can force every
// liked candidate's score down to.
bool decide_veto_weighted(const Oms& oms, const Variant& variant);

// The three-candidate case, decided by direct subset-sum interval queries on
// the coalition (d sigma-top) or adversary (d middle) weights.
bool decide_veto3_weighted(const Oms& oms, const Variant& variant);

}  // namespace seqvote
