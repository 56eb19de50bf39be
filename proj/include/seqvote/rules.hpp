#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqvote/election.hpp"
#include "seqvote/formula.hpp"

namespace seqvote {

struct Rule {
  enum class Kind { scoring, k_approval, k_veto, tiered };
  Kind kind = Kind::k_approval;
  int k = 1;                     // k_approval / k_veto
  std::vector<long long> alpha;  // scoring

  static Rule plurality();
  static Rule veto();
  static Rule approval(int k);
  static Rule kveto(int k);
  static Rule scoring(std::vector<long long> alpha);
  static Rule tiered();

  bool is_scoring_family() const { return kind != Kind::tiered; }
  bool is_plurality() const { return kind == Kind::k_approval && k == 1; }
  bool is_veto() const { return kind == Kind::k_veto && k == 1; }
  std::string text() const;  // file token form
};

// The positional score vector an m-candidate election uses: alpha itself for
// scoring (length-checked), 1^k 0^(m-k) for k-approval, 1^(m-k) 0^k for
// k-veto. Entries must be nonincreasing and nonnegative.
std::vector<long long> scoring_vector(const Rule& rule, int m);

// Weighted positional scores over index-compiled ballots.
std::vector<Big> scores_of(const std::vector<long long>& alpha, int m,
                           const std::vector<Compiled::Cast>& votes);
std::vector<char> winner_mask(const std::vector<Big>& scores);

// Winner set by name under any supported rule (tiered included).
std::vector<std::string> winners(const Rule& rule,
                                 const std::vector<std::string>& candidates,
                                 const std::vector<PastVote>& votes);

// Bit decoding used by the tiered rule: drop c from the ballot, take the
// 2*width least preferred remaining candidates c_1 (least preferred) up to
// c_{2*width}, and read bit l as 0 iff name(c_{2l-1}) < name(c_{2l}) bytewise.
std::vector<int> decode_bits(const Ballot& ballot, const std::string& c,
                             int width);
std::vector<int> decode_bits_idx(const std::vector<int>& ballot, int c,
                                 int width,
                                 const std::vector<std::string>& names);

// The tiered election rule. The lexicographically least candidate name is
// read as a formula; voters are sorted by (name, ballot); the first `blocks`
// of them assign the formula's variables through decode_bits; everyone wins
// if the formula holds and nobody wins otherwise (also on any malformed
// encoding). Weights are ignored: the rule reads ballots only.
std::vector<std::string> tiered_winners(
    const std::vector<std::string>& candidates,
    const std::vector<PastVote>& votes);

// Index-level form used by the game evaluator: (voter name, ballot).
std::vector<char> tiered_winner_mask(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string_view, const std::vector<int>*>>&
        votes);

}  // namespace seqvote
