#pragma once

// Shared test scaffolding: terse instance builders plus an independent
// brute-force evaluation of the voting game. The brute force recurses over
// whole ballots and calls the public winners() on the complete profile at
// every leaf, so it shares no evaluation code with the game-tree search it
// is used to check.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqvote/election.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/reductions.hpp"
#include "seqvote/rules.hpp"

namespace testbrute {

inline constexpr seqvote::Role M = seqvote::Role::manipulator;
inline constexpr seqvote::Role N = seqvote::Role::nonmanipulator;

inline seqvote::Ballot bal(const std::string& text) {
  seqvote::Ballot b;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, '>')) b.order.push_back(piece);
  return b;
}

inline std::vector<seqvote::Ballot> all_ballots(
    std::vector<std::string> cands) {
  std::sort(cands.begin(), cands.end());
  std::vector<seqvote::Ballot> out;
  do {
    out.push_back(seqvote::Ballot{cands});
  } while (std::next_permutation(cands.begin(), cands.end()));
  return out;
}

inline bool leaf_ok(const std::vector<std::string>& win,
                    const std::set<std::string>& goal, seqvote::Direction dir,
                    seqvote::WinnerModel wm) {
  bool sole_hit = win.size() == 1 && goal.count(win.front()) != 0;
  bool touches = std::any_of(win.begin(), win.end(), [&](const std::string& c) {
    return goal.count(c) != 0;
  });
  if (dir == seqvote::Direction::constructive)
    return wm == seqvote::WinnerModel::unique ? sole_hit : touches;
  return wm == seqvote::WinnerModel::unique ? !sole_hit : !touches;
}

// One ply: a voter together with a committed ballot, if any.
struct Ply {
  seqvote::Voter voter;
  std::optional<seqvote::Ballot> fixed;
};

inline bool brute_plies(const std::vector<std::string>& cands,
                        std::vector<seqvote::PastVote>& votes,
                        const std::vector<Ply>& plies, size_t i,
                        const seqvote::Rule& rule,
                        const std::set<std::string>& goal,
                        const seqvote::Variant& variant,
                        const std::vector<seqvote::Ballot>& space) {
  if (i == plies.size())
    return leaf_ok(seqvote::winners(rule, cands, votes), goal,
                   variant.direction, variant.winner_model);
  auto attempt = [&](const seqvote::Ballot& b) {
    votes.push_back(seqvote::PastVote{plies[i].voter, b});
    bool r =
        brute_plies(cands, votes, plies, i + 1, rule, goal, variant, space);
    votes.pop_back();
    return r;
  };
  if (plies[i].fixed) return attempt(*plies[i].fixed);
  bool exists = plies[i].voter.role == M;
  for (const auto& b : space)
    if (attempt(b) == exists) return exists;
  return !exists;
}

inline bool brute_game(const seqvote::Oms& oms, const seqvote::Rule& rule,
                       const seqvote::Variant& variant) {
  auto goal = seqvote::goal_set(oms.sigma, oms.distinguished,
                                variant.direction, variant.target);
  std::vector<Ply> plies;
  plies.push_back(Ply{oms.snapshot.current, oms.snapshot.current_fixed});
  for (const auto& v : oms.snapshot.future)
    plies.push_back(Ply{v, std::nullopt});
  auto votes = oms.snapshot.past;
  auto space = all_ballots(oms.candidates);
  return brute_plies(oms.candidates, votes, plies, 0, rule, goal, variant,
                     space);
}

// Conjoin the game value over every ordering of the remaining voters.
inline bool brute_schedule(const seqvote::ScheduleFreeState& st,
                           const seqvote::Rule& rule,
                           const seqvote::Variant& variant) {
  auto goal = seqvote::goal_set(st.sigma, st.distinguished, variant.direction,
                                variant.target);
  auto space = all_ballots(st.candidates);
  std::vector<int> order(st.remaining.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  do {
    std::vector<Ply> plies;
    for (int ix : order)
      plies.push_back(Ply{st.remaining[static_cast<size_t>(ix)], std::nullopt});
    auto votes = st.past;
    if (!brute_plies(st.candidates, votes, plies, 0, rule, goal, variant,
                     space))
      return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

// One-shot coalition manipulation: does some joint ballot choice for the
// coalition put the target inside (constructive) / keep it out of
// (destructive) the winner set?
inline bool brute_standard_wcm(const seqvote::StandardWcm& wcm,
                               seqvote::Direction dir) {
  auto space = all_ballots(wcm.candidates);
  std::vector<seqvote::PastVote> votes = wcm.fixed_votes;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == wcm.coalition_weights.size()) {
      auto win = seqvote::winners(wcm.rule, wcm.candidates, votes);
      bool in = std::find(win.begin(), win.end(), wcm.target) != win.end();
      return dir == seqvote::Direction::constructive ? in : !in;
    }
    for (const auto& b : space) {
      votes.push_back(seqvote::PastVote{
          seqvote::Voter{"bf" + std::to_string(i), wcm.coalition_weights[i], M},
          b});
      bool r = rec(i + 1);
      votes.pop_back();
      if (r) return true;
    }
    return false;
  };
  return rec(0);
}

// Fluent builder for terse test bodies.
struct Ins {
  seqvote::Oms o;
  Ins(std::vector<std::string> cands, const std::string& sigma,
      std::string d = "") {
    o.candidates = std::move(cands);
    o.sigma = bal(sigma);
    o.distinguished = std::move(d);
  }
  Ins& past(const std::string& name, seqvote::Big w, seqvote::Role r,
            const std::string& ballot) {
    o.snapshot.past.push_back(
        seqvote::PastVote{seqvote::Voter{name, std::move(w), r}, bal(ballot)});
    return *this;
  }
  Ins& cur(const std::string& name, seqvote::Big w, seqvote::Role r = M) {
    o.snapshot.current = seqvote::Voter{name, std::move(w), r};
    return *this;
  }
  Ins& cur_fixed(const std::string& ballot) {
    o.snapshot.current_fixed = bal(ballot);
    return *this;
  }
  Ins& fut(const std::string& name, seqvote::Big w, seqvote::Role r) {
    o.snapshot.future.push_back(seqvote::Voter{name, std::move(w), r});
    return *this;
  }
  const seqvote::Oms& done() const { return o; }
};

inline seqvote::Variant variant(
    seqvote::Direction dir = seqvote::Direction::constructive,
    seqvote::Target tgt = seqvote::Target::segment,
    seqvote::Weighting wt = seqvote::Weighting::weighted,
    seqvote::WinnerModel wm = seqvote::WinnerModel::nonunique,
    bool freeform = false) {
  seqvote::Variant v;
  v.direction = dir;
  v.target = tgt;
  v.weighting = wt;
  v.winner_model = wm;
  v.freeform = freeform;
  return v;
}

// The error code a callable raises, if any.
template <typename F>
inline std::optional<seqvote::Err> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const seqvote::Error& e) {
    return e.code;
  }
  return std::nullopt;
}

}  // namespace testbrute
