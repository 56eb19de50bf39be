#pragma once

#include "seqvote/election.hpp"
#include "seqvote/rules.hpp"

namespace seqvote {

struct SearchLimits {
  long long node_cap = 10'000'000;  // BudgetError beyond this many nodes
};

struct SearchStats {
  long long nodes = 0;
};

// Exact value of the alternating voting game: the current voter moves first
// (an exists-ply if a manipulator, a forall-ply otherwise; a committed ballot
// is a fixed move), then the future voters in order, each seeing everything
// cast so far. True iff the coalition can force its goal.
bool decide_online(const Oms& oms, const Rule& rule, const Variant& variant,
                   const SearchLimits& limits = {},
                   SearchStats* stats = nullptr);

// The verdict for every choice of distinguished candidate, in candidate
// declaration order. oms.distinguished is ignored.
std::vector<char> full_profile(const Oms& oms, const Rule& rule,
                               const Variant& variant,
                               const SearchLimits& limits = {});

enum class ScheduleMethod { exhaustive, manipulators_first };

// True iff the coalition can force its goal under every ordering of the
// remaining voters. `manipulators_first` evaluates only the most demanding
// order (all manipulators before all nonmanipulators, input order within
// each group); `exhaustive` conjoins all distinct orders.
bool decide_schedule_robust(const ScheduleFreeState& state, const Rule& rule,
                            const Variant& variant,
                            ScheduleMethod method = ScheduleMethod::manipulators_first,
                            const SearchLimits& limits = {});

// Evaluate an already-compiled game. Exposed for solver cross-checks.
bool eval_game(const Compiled& game, const Rule& rule,
               const SearchLimits& limits = {}, SearchStats* stats = nullptr);

}  // namespace seqvote
