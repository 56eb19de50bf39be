#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqvote/election.hpp"
#include "seqvote/formula.hpp"
#include "seqvote/rules.hpp"

namespace seqvote {

// A closed quantified boolean formula in prenex form: blocks alternate
// exists/forall starting with exists; block i binds x_{i,1}..x_{i,widths[i]}.
struct Qbf {
  std::vector<int> widths;
  Formula matrix;
};

// Source form: quantifier prefix, a colon, then the matrix, e.g.
//   "E x11 x12 A x21 : (x11 | ~x21) & x12"
// Variables may be written x11, x1,1 or x_{1,1}. Block i must bind
// x_{i,1}..x_{i,k_i} in order; the matrix may use only bound variables and
// must touch every block (MalformedQbf otherwise).
Qbf parse_qbf(std::string_view src);
std::string qbf_text(const Qbf& q);
void validate_qbf(const Qbf& q);
bool qbf_eval(const Qbf& q);  // TooLarge beyond 20 variables

// A generated instance, ready for the oracle or a file.
struct GenResult {
  Oms oms;
  Rule rule;
  Variant variant;
};

// QBF -> online manipulation under the tiered rule: candidate c is the
// matrix rendered as a name, plus 2*max(widths) dummies extending c; voter i
// realizes block i (odd = manipulator); sigma ranks by ascending name, so
// d = c sits on top. True iff the formula is true.
GenResult gen_qbf_oms(const Qbf& q);

// Is the multiset splittable into two halves of equal sum? Errors: OddSum,
// TooLarge (> 24 items), BadPartitionInput.
bool partition_brute(const std::vector<Big>& weights);

enum class PartitionFlavor { destructive, constructive_complement };

// Partition -> weighted plurality under the unique-winner model.
// destructive: z manipulators of weight (m-1)*w_i try to prevent any unique
// winner; true iff the multiset partitions. constructive_complement: a
// weight-0 manipulator watches z nonmanipulators with those weights; true
// iff the multiset does NOT partition.
GenResult gen_partition_plurality_uw(const std::vector<Big>& weights, int m,
                                     PartitionFlavor flavor);

// Partition -> weighted veto with three candidates (nonunique winners,
// d in the middle of sigma): true iff the multiset does NOT partition.
GenResult gen_partition_veto3(const std::vector<Big>& weights);

// Subset-sum image of a 3cnf formula in base 6: choosing the true-item or
// false-item per variable plus clause slack items reaches target_base + a
// exactly for the satisfying assignments a (read as an n-bit number), and no
// subset reaches target_base + K for K in [2^n, 2*(2^n - 1)].
struct SubsetSum {
  std::vector<Big> items;
  Big target_base;
};
SubsetSum wagner_subset_sum(const Cnf& f);  // NotThreeCnf

// Lexicographically greatest satisfying assignment (x_1 first), or nullopt
// if unsatisfiable. TooLarge beyond 22 variables.
std::optional<std::vector<bool>> maxsatasg_brute(const Cnf& f);

// The pair of formulas the equal-maximum-assignment comparison reduces to:
// phi_hat = phi AND psi AND x_1 (padded), psi_hat = 3cnf(phi OR psi OR ~x_1),
// both over the same horizon n_hat > n. VariableX1Used if x_1 occurs.
struct HatPair {
  Cnf phi_hat;
  Cnf psi_hat;
  int n_hat = 0;
};
HatPair build_hat_formulas(const Cnf& phi, const Cnf& psi);

// Both satisfiable with the same lexicographically greatest satisfying
// assignment? (The brute ground truth for the generator below.)
bool maxsatasg_equal(const Cnf& phi, const Cnf& psi);

// The full chain: hat formulas -> subset-sum items -> a four-candidate
// weighted constructive veto instance whose value is exactly membership in
// the equal-maximum-assignment language. NegativeDerivedWeight if a derived
// past weight were negative (cannot happen for hat pairs built here).
GenResult gen_maxsatasg_veto_oms(const Cnf& phi, const Cnf& psi);

// One-shot weighted coalition manipulation: fixed voters S have voted, the
// coalition T (weights only) votes last, rule evaluated once.
struct StandardWcm {
  std::vector<std::string> candidates;
  Rule rule;
  std::vector<PastVote> fixed_votes;
  std::vector<Big> coalition_weights;
  std::string target;
};

// Embed as an online instance: all coalition members pending (u first), the
// target distinguished, sigma putting it on top (constructive) or at the
// bottom (destructive). EmptyCoalition if T is empty.
GenResult embed_standard_wcm(const StandardWcm& wcm, Direction direction);

}  // namespace seqvote
