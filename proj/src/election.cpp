#include "seqvote/election.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace seqvote {

namespace {

bool legal_name(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (c <= ' ' || c > '~' || c == '>') return false;
  return true;
}

void check_name(const std::string& s, const char* what) {
  if (!legal_name(s))
    fail(Err::BadName, std::string(what) + " name '" + s +
                           "' (printable, no spaces, no '>', nonempty)");
}

struct NameIndex {
  std::unordered_map<std::string, int> idx;
  int at(const std::string& s) const {
    auto it = idx.find(s);
    return it == idx.end() ? -1 : it->second;
  }
};

NameIndex index_candidates(const std::vector<std::string>& candidates) {
  if (candidates.empty()) fail(Err::EmptyCandidateSet, "no candidates");
  NameIndex ni;
  for (size_t i = 0; i < candidates.size(); ++i) {
    check_name(candidates[i], "candidate");
    if (!ni.idx.emplace(candidates[i], static_cast<int>(i)).second)
      fail(Err::DuplicateName, "candidate '" + candidates[i] + "'");
  }
  return ni;
}

// A ballot must rank each candidate exactly once.
std::vector<int> index_ballot(const Ballot& b, const NameIndex& ni, int m,
                              const std::string& owner) {
  std::vector<int> out;
  out.reserve(b.order.size());
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (auto& name : b.order) {
    int c = ni.at(name);
    if (c < 0)
      fail(Err::UnknownCandidateInBallot,
           "'" + name + "' in " + owner + " is not a candidate");
    if (seen[static_cast<size_t>(c)])
      fail(Err::IncompleteBallot,
           owner + " ranks '" + name + "' more than once");
    seen[static_cast<size_t>(c)] = 1;
    out.push_back(c);
  }
  if (static_cast<int>(out.size()) != m)
    fail(Err::IncompleteBallot, owner + " does not rank every candidate");
  return out;
}

void check_weight(const Voter& v) {
  if (v.weight < 0)
    fail(Err::NegativeWeight, "voter '" + v.name + "' has weight " +
                                  to_string(v.weight));
}

void check_unit(const Voter& v) {
  if (v.weight != 1)
    fail(Err::NonUnitWeightInUnweighted,
         "voter '" + v.name + "' has weight " + to_string(v.weight) +
             " in an unweighted instance");
}

class VoterNames {
 public:
  void add(const Voter& v) {
    check_name(v.name, "voter");
    if (!seen_.insert(v.name).second)
      fail(Err::DuplicateName, "voter '" + v.name + "'");
  }

 private:
  std::unordered_set<std::string> seen_;
};

std::vector<char> goal_mask(const std::vector<int>& sigma_rank, int dist,
                            Direction direction, Target target) {
  std::vector<char> mask(sigma_rank.size(), 0);
  int rd = sigma_rank[static_cast<size_t>(dist)];
  for (size_t c = 0; c < sigma_rank.size(); ++c) {
    bool in;
    if (target == Target::pinpoint)
      in = static_cast<int>(c) == dist;
    else if (direction == Direction::constructive)
      in = sigma_rank[c] <= rd;  // d and everything sigma-above it
    else
      in = sigma_rank[c] >= rd;  // d and everything sigma-below it
    mask[c] = in ? 1 : 0;
  }
  return mask;
}

}  // namespace

int Compiled::cand(const std::string& name) const {
  for (int i = 0; i < m; ++i)
    if (names[static_cast<size_t>(i)] == name) return i;
  return -1;
}

Compiled compile(const Oms& oms, const Variant& variant,
                 bool allow_missing_distinguished) {
  NameIndex ni = index_candidates(oms.candidates);
  int m = static_cast<int>(oms.candidates.size());

  Compiled g;
  g.names = oms.candidates;
  g.m = m;
  g.variant = variant;
  g.sigma = index_ballot(oms.sigma, ni, m, "sigma");
  g.sigma_rank.assign(static_cast<size_t>(m), 0);
  for (int r = 0; r < m; ++r) g.sigma_rank[static_cast<size_t>(g.sigma[r])] = r;

  if (!oms.distinguished.empty()) {
    g.dist = ni.at(oms.distinguished);
    if (g.dist < 0)
      fail(Err::DistinguishedNotCandidate,
           "'" + oms.distinguished + "' is not a candidate");
  } else if (!allow_missing_distinguished) {
    fail(Err::DistinguishedNotCandidate, "distinguished candidate missing");
  }
  if (g.dist >= 0)
    g.goal = goal_mask(g.sigma_rank, g.dist, variant.direction, variant.target);

  VoterNames names;
  const Snapshot& s = oms.snapshot;
  for (auto& pv : s.past) {
    names.add(pv.voter);
    check_weight(pv.voter);
    if (variant.weighting == Weighting::unweighted) check_unit(pv.voter);
    g.past.push_back(Compiled::Cast{
        pv.voter.name, pv.voter.weight,
        index_ballot(pv.ballot, ni, m, "ballot of '" + pv.voter.name + "'")});
  }

  names.add(s.current);
  check_weight(s.current);
  if (variant.weighting == Weighting::unweighted) check_unit(s.current);
  if (!variant.freeform && s.current.role != Role::manipulator)
    fail(Err::CurrentVoterNotManipulator,
         "current voter '" + s.current.name + "' must be a manipulator");
  Compiled::Ply u{s.current.name, s.current.weight, s.current.role,
                  std::nullopt};
  if (s.current_fixed) {
    if (!variant.freeform || s.current.role != Role::nonmanipulator)
      fail(Err::UnexpectedFixedBallot,
           "only a freeform nonmanipulator current voter may carry a ballot");
    u.fixed = index_ballot(*s.current_fixed, ni, m,
                           "fixed ballot of '" + s.current.name + "'");
  }
  g.plies.push_back(std::move(u));

  long long manipulators = s.current.role == Role::manipulator ? 1 : 0;
  for (auto& v : s.future) {
    names.add(v);
    check_weight(v);
    if (variant.weighting == Weighting::unweighted) check_unit(v);
    if (v.role == Role::manipulator) ++manipulators;
    g.plies.push_back(Compiled::Ply{v.name, v.weight, v.role, std::nullopt});
  }

  if (variant.coalition_bound) {
    if (*variant.coalition_bound < 0)
      fail(Err::BadCoalitionBound, "coalition bound is negative");
    if (manipulators > *variant.coalition_bound)
      fail(Err::BadCoalitionBound,
           std::to_string(manipulators) +
               " pending manipulators exceed the coalition bound " +
               std::to_string(*variant.coalition_bound));
  }
  return g;
}

const Oms& validate_oms(const Oms& oms, const Variant& variant) {
  compile(oms, variant, false);
  return oms;
}

void validate_state(const ScheduleFreeState& state, const Variant& variant) {
  NameIndex ni = index_candidates(state.candidates);
  int m = static_cast<int>(state.candidates.size());
  index_ballot(state.sigma, ni, m, "sigma");
  if (state.distinguished.empty() || ni.at(state.distinguished) < 0)
    fail(Err::DistinguishedNotCandidate,
         "'" + state.distinguished + "' is not a candidate");
  VoterNames names;
  long long manipulators = 0;
  for (auto& pv : state.past) {
    names.add(pv.voter);
    check_weight(pv.voter);
    if (variant.weighting == Weighting::unweighted) check_unit(pv.voter);
    index_ballot(pv.ballot, ni, m, "ballot of '" + pv.voter.name + "'");
  }
  for (auto& v : state.remaining) {
    names.add(v);
    check_weight(v);
    if (variant.weighting == Weighting::unweighted) check_unit(v);
    if (v.role == Role::manipulator) ++manipulators;
  }
  if (variant.coalition_bound) {
    if (*variant.coalition_bound < 0)
      fail(Err::BadCoalitionBound, "coalition bound is negative");
    if (manipulators > *variant.coalition_bound)
      fail(Err::BadCoalitionBound,
           std::to_string(manipulators) +
               " remaining manipulators exceed the coalition bound " +
               std::to_string(*variant.coalition_bound));
  }
}

Compiled compile_order(const ScheduleFreeState& state, const Variant& variant,
                       const std::vector<int>& order) {
  validate_state(state, variant);
  NameIndex ni = index_candidates(state.candidates);
  int m = static_cast<int>(state.candidates.size());

  Compiled g;
  g.names = state.candidates;
  g.m = m;
  g.variant = variant;
  g.sigma = index_ballot(state.sigma, ni, m, "sigma");
  g.sigma_rank.assign(static_cast<size_t>(m), 0);
  for (int r = 0; r < m; ++r) g.sigma_rank[static_cast<size_t>(g.sigma[r])] = r;
  g.dist = ni.at(state.distinguished);
  g.goal = goal_mask(g.sigma_rank, g.dist, variant.direction, variant.target);
  for (auto& pv : state.past)
    g.past.push_back(Compiled::Cast{
        pv.voter.name, pv.voter.weight,
        index_ballot(pv.ballot, ni, m, "ballot of '" + pv.voter.name + "'")});
  for (int oi : order) {
    const Voter& v = state.remaining[static_cast<size_t>(oi)];
    g.plies.push_back(Compiled::Ply{v.name, v.weight, v.role, std::nullopt});
  }
  return g;
}

std::set<std::string> goal_set(const Ballot& sigma, const std::string& d,
                               Direction direction, Target target) {
  std::vector<std::string> names = sigma.order;
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size())
      fail(Err::IncompleteBallot, "sigma ranks a candidate more than once");
  }
  auto it = std::find(names.begin(), names.end(), d);
  if (it == names.end())
    fail(Err::DistinguishedNotCandidate, "'" + d + "' does not occur in sigma");
  size_t rd = static_cast<size_t>(it - names.begin());
  std::set<std::string> out;
  if (target == Target::pinpoint) {
    out.insert(d);
    return out;
  }
  if (direction == Direction::constructive)
    for (size_t r = 0; r <= rd; ++r) out.insert(names[r]);
  else
    for (size_t r = rd; r < names.size(); ++r) out.insert(names[r]);
  return out;
}

}  // namespace seqvote
