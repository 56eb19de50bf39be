#include "seqvote/rules.hpp"

#include <algorithm>
#include <numeric>

namespace seqvote {

Rule Rule::plurality() { return approval(1); }
Rule Rule::veto() { return kveto(1); }

Rule Rule::approval(int k) {
  if (k < 1) fail(Err::BadScoringVector, "k-approval needs k >= 1");
  Rule r;
  r.kind = Kind::k_approval;
  r.k = k;
  return r;
}

Rule Rule::kveto(int k) {
  if (k < 1) fail(Err::BadScoringVector, "k-veto needs k >= 1");
  Rule r;
  r.kind = Kind::k_veto;
  r.k = k;
  return r;
}

Rule Rule::scoring(std::vector<long long> alpha) {
  if (alpha.empty()) fail(Err::BadScoringVector, "empty scoring vector");
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) fail(Err::BadScoringVector, "negative scoring entry");
    if (i && alpha[i] > alpha[i - 1])
      fail(Err::BadScoringVector, "scoring entries must be nonincreasing");
  }
  Rule r;
  r.kind = Kind::scoring;
  r.alpha = std::move(alpha);
  return r;
}

Rule Rule::tiered() {
  Rule r;
  r.kind = Kind::tiered;
  return r;
}

std::string Rule::text() const {
  switch (kind) {
    case Kind::k_approval:
      if (k == 1) return "plurality";
      return "approval " + std::to_string(k);
    case Kind::k_veto:
      if (k == 1) return "veto";
      return "kveto " + std::to_string(k);
    case Kind::scoring: {
      std::string out = "scoring";
      for (long long a : alpha) out += " " + std::to_string(a);
      return out;
    }
    case Kind::tiered: return "tiered";
  }
  return "?";
}

std::vector<long long> scoring_vector(const Rule& rule, int m) {
  if (m < 1) fail(Err::MTooSmall, "no candidates");
  std::vector<long long> v(static_cast<size_t>(m), 0);
  switch (rule.kind) {
    case Rule::Kind::scoring:
      if (static_cast<int>(rule.alpha.size()) != m)
        fail(Err::LengthMismatch,
             "scoring vector has " + std::to_string(rule.alpha.size()) +
                 " entries for " + std::to_string(m) + " candidates");
      return rule.alpha;
    case Rule::Kind::k_approval:
      if (m < rule.k)
        fail(Err::MTooSmall, std::to_string(rule.k) + "-approval needs at least " +
                                 std::to_string(rule.k) + " candidates");
      std::fill(v.begin(), v.begin() + rule.k, 1);
      return v;
    case Rule::Kind::k_veto:
      if (m < rule.k)
        fail(Err::MTooSmall, std::to_string(rule.k) + "-veto needs at least " +
                                 std::to_string(rule.k) + " candidates");
      std::fill(v.begin(), v.end() - rule.k, 1);
      return v;
    case Rule::Kind::tiered:
      fail(Err::WrongVariant, "the tiered rule has no scoring vector");
  }
  return v;
}

std::vector<Big> scores_of(const std::vector<long long>& alpha, int m,
                           const std::vector<Compiled::Cast>& votes) {
  std::vector<Big> sc(static_cast<size_t>(m), 0);
  for (auto& v : votes)
    for (int r = 0; r < m; ++r)
      if (alpha[static_cast<size_t>(r)] != 0)
        sc[static_cast<size_t>(v.ballot[static_cast<size_t>(r)])] +=
            v.w * alpha[static_cast<size_t>(r)];
  return sc;
}

std::vector<char> winner_mask(const std::vector<Big>& scores) {
  std::vector<char> mask(scores.size(), 0);
  if (scores.empty()) return mask;
  const Big* best = &scores[0];
  for (auto& s : scores)
    if (s > *best) best = &s;
  for (size_t c = 0; c < scores.size(); ++c) mask[c] = scores[c] == *best;
  return mask;
}

std::vector<int> decode_bits_idx(const std::vector<int>& ballot, int c,
                                 int width,
                                 const std::vector<std::string>& names) {
  std::vector<int> rem;
  rem.reserve(ballot.size());
  for (int x : ballot)
    if (x != c) rem.push_back(x);
  if (static_cast<int>(rem.size()) < 2 * width)
    fail(Err::TooFewCandidates,
         "ballot must rank at least " + std::to_string(1 + 2 * width) +
             " candidates including the formula candidate");
  // position k from the bottom: k = 1 is the least preferred
  auto at = [&](int k) {
    return rem[rem.size() - static_cast<size_t>(k)];
  };
  std::vector<int> bits(static_cast<size_t>(width), 0);
  for (int l = 1; l <= width; ++l) {
    const std::string& lo = names[static_cast<size_t>(at(2 * l - 1))];
    const std::string& hi = names[static_cast<size_t>(at(2 * l))];
    bits[static_cast<size_t>(l - 1)] = lo < hi ? 0 : 1;
  }
  return bits;
}

std::vector<int> decode_bits(const Ballot& ballot, const std::string& c,
                             int width) {
  // name-level convenience wrapper: indexes the ballot against itself
  std::vector<std::string> names = ballot.order;
  std::vector<int> idx(names.size());
  int ci = -1;
  for (size_t i = 0; i < names.size(); ++i) {
    idx[i] = static_cast<int>(i);
    if (names[i] == c) ci = static_cast<int>(i);
  }
  if (ci < 0)
    fail(Err::UnknownCandidateInBallot,
         "'" + c + "' does not occur in the ballot");
  return decode_bits_idx(idx, ci, width, names);
}

std::vector<char> tiered_winner_mask(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string_view, const std::vector<int>*>>&
        votes) {
  const size_t m = names.size();
  std::vector<char> nobody(m, 0);

  // the lexicographically least candidate name carries the formula
  size_t ci = 0;
  for (size_t i = 1; i < m; ++i)
    if (names[i] < names[ci]) ci = i;
  auto parsed = parse_formula(names[ci]);
  if (!parsed) return nobody;
  const Formula& formula = *parsed;

  std::vector<std::pair<int, int>> vars;
  f_vars(formula, vars);
  int blocks = 0, width = 0;
  for (auto& [i, j] : vars) {
    blocks = std::max(blocks, i);
    width = std::max(width, j);
  }
  // every block up to `blocks` must be populated
  std::vector<char> seen(static_cast<size_t>(blocks) + 1, 0);
  for (auto& [i, j] : vars) seen[static_cast<size_t>(i)] = 1;
  for (int i = 1; i <= blocks; ++i)
    if (!seen[static_cast<size_t>(i)]) return nobody;

  if (static_cast<int>(votes.size()) < blocks) return nobody;
  if (static_cast<int>(m) < 1 + 2 * width) return nobody;

  // voters sorted by (name, ballot); the first `blocks` assign the variables
  std::vector<size_t> order(votes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (votes[a].first != votes[b].first) return votes[a].first < votes[b].first;
    const auto& ba = *votes[a].second;
    const auto& bb = *votes[b].second;
    return std::lexicographical_compare(
        ba.begin(), ba.end(), bb.begin(), bb.end(),
        [&](int x, int y) { return names[static_cast<size_t>(x)] <
                                   names[static_cast<size_t>(y)]; });
  });

  std::vector<std::vector<int>> bits(static_cast<size_t>(blocks));
  for (int i = 0; i < blocks; ++i)
    bits[static_cast<size_t>(i)] = decode_bits_idx(
        *votes[order[static_cast<size_t>(i)]].second, static_cast<int>(ci),
        width, names);

  bool value = f_eval(formula, [&](int i, int j) {
    return bits[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] == 1;
  });
  if (!value) return nobody;
  return std::vector<char>(m, 1);
}

std::vector<std::string> tiered_winners(
    const std::vector<std::string>& candidates,
    const std::vector<PastVote>& votes) {
  std::vector<std::vector<int>> ballots;
  ballots.reserve(votes.size());
  // index the ballots against the candidate list
  for (auto& pv : votes) {
    std::vector<int> b;
    b.reserve(pv.ballot.order.size());
    for (auto& name : pv.ballot.order) {
      auto it = std::find(candidates.begin(), candidates.end(), name);
      if (it == candidates.end())
        fail(Err::UnknownCandidateInBallot,
             "'" + name + "' is not a candidate");
      b.push_back(static_cast<int>(it - candidates.begin()));
    }
    if (b.size() != candidates.size())
      fail(Err::IncompleteBallot,
           "ballot of '" + pv.voter.name + "' does not rank every candidate");
    ballots.push_back(std::move(b));
  }
  std::vector<std::pair<std::string_view, const std::vector<int>*>> view;
  view.reserve(votes.size());
  for (size_t i = 0; i < votes.size(); ++i)
    view.emplace_back(votes[i].voter.name, &ballots[i]);
  std::vector<char> mask = tiered_winner_mask(candidates, view);
  std::vector<std::string> out;
  for (size_t c = 0; c < candidates.size(); ++c)
    if (mask[c]) out.push_back(candidates[c]);
  return out;
}

std::vector<std::string> winners(const Rule& rule,
                                 const std::vector<std::string>& candidates,
                                 const std::vector<PastVote>& votes) {
  if (rule.kind == Rule::Kind::tiered) return tiered_winners(candidates, votes);
  int m = static_cast<int>(candidates.size());
  if (m == 0) fail(Err::EmptyCandidateSet, "no candidates");
  std::vector<long long> alpha = scoring_vector(rule, m);
  std::vector<Compiled::Cast> cast;
  cast.reserve(votes.size());
  for (auto& pv : votes) {
    if (pv.voter.weight < 0)
      fail(Err::NegativeWeight, "voter '" + pv.voter.name + "'");
    std::vector<int> b;
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (auto& name : pv.ballot.order) {
      auto it = std::find(candidates.begin(), candidates.end(), name);
      if (it == candidates.end())
        fail(Err::UnknownCandidateInBallot,
             "'" + name + "' is not a candidate");
      int c = static_cast<int>(it - candidates.begin());
      if (seen[static_cast<size_t>(c)])
        fail(Err::IncompleteBallot,
             "ballot of '" + pv.voter.name + "' repeats '" + name + "'");
      seen[static_cast<size_t>(c)] = 1;
      b.push_back(c);
    }
    if (static_cast<int>(b.size()) != m)
      fail(Err::IncompleteBallot,
           "ballot of '" + pv.voter.name + "' does not rank every candidate");
    cast.push_back(Compiled::Cast{pv.voter.name, pv.voter.weight, std::move(b)});
  }
  std::vector<char> mask = winner_mask(scores_of(alpha, m, cast));
  std::vector<std::string> out;
  for (int c = 0; c < m; ++c)
    if (mask[static_cast<size_t>(c)]) out.push_back(candidates[static_cast<size_t>(c)]);
  return out;
}

}  // namespace seqvote
