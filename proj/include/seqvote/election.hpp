#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqvote/bigint.hpp"
#include "seqvote/errors.hpp"

namespace seqvote {

enum class Role { manipulator, nonmanipulator };

struct Voter {
  std::string name;
  Big weight = 1;
  Role role = Role::nonmanipulator;
};

// A strict total order over the candidate set, most preferred first.
struct Ballot {
  std::vector<std::string> order;
};

struct PastVote {
  Voter voter;
  Ballot ballot;
};

// The disclosed election state at decision time: the votes already cast, the
// voter u whose move is in question, and the voters still to come, in voting
// order.
struct Snapshot {
  std::vector<PastVote> past;
  Voter current;
  // Freeform only: a nonmanipulator u may arrive with a committed ballot,
  // turning the first ply into a fixed move.
  std::optional<Ballot> current_fixed;
  std::vector<Voter> future;
};

struct Oms {
  std::vector<std::string> candidates;  // declaration order
  Snapshot snapshot;
  Ballot sigma;               // the coalition's shared preference order
  std::string distinguished;  // empty = absent (profile instances)
};

enum class Direction { constructive, destructive };
enum class Target { segment, pinpoint };
enum class Weighting { weighted, unweighted };
enum class WinnerModel { nonunique, unique };

struct Variant {
  Direction direction = Direction::constructive;
  Target target = Target::segment;
  Weighting weighting = Weighting::weighted;
  WinnerModel winner_model = WinnerModel::nonunique;
  bool freeform = false;
  std::optional<long long> coalition_bound;
};

// A decision point where the order of the remaining voters is not yet fixed.
struct ScheduleFreeState {
  std::vector<std::string> candidates;
  std::vector<PastVote> past;
  std::vector<Voter> remaining;
  Ballot sigma;
  std::string distinguished;
};

// Throws Error on any broken invariant, otherwise returns its argument.
const Oms& validate_oms(const Oms& oms, const Variant& variant);
void validate_state(const ScheduleFreeState& state, const Variant& variant);

// The candidates the coalition is happy with (constructive) or must keep out
// of the winner set (destructive).
std::set<std::string> goal_set(const Ballot& sigma, const std::string& d,
                               Direction direction, Target target);

// Index-compiled instance shared by the oracle and the solvers. Candidates
// are their declaration-order indices.
struct Compiled {
  std::vector<std::string> names;
  int m = 0;
  std::vector<int> sigma;       // indices, most preferred first
  std::vector<int> sigma_rank;  // rank by index, 0 = sigma-top
  int dist = -1;                // -1 when absent
  std::vector<char> goal;       // goal (constructive) or forbidden (destructive)
  Variant variant;

  struct Cast {
    std::string voter;
    Big w;
    std::vector<int> ballot;
  };
  std::vector<Cast> past;

  struct Ply {
    std::string voter;
    Big w;
    Role role = Role::manipulator;
    std::optional<std::vector<int>> fixed;
  };
  std::vector<Ply> plies;  // u first, then the future voters in order

  int cand(const std::string& name) const;  // -1 if unknown
};

// Validates and compiles. allow_missing_distinguished supports profile
// computations, where d is chosen per call.
Compiled compile(const Oms& oms, const Variant& variant,
                 bool allow_missing_distinguished = false);

// Compile a schedule-free state under one concrete ordering of `remaining`
// (order[i] indexes state.remaining). The first voter may have either role.
Compiled compile_order(const ScheduleFreeState& state, const Variant& variant,
                       const std::vector<int>& order);

}  // namespace seqvote
