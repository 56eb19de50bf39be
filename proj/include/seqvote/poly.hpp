#pragma once

#include <optional>

#include "seqvote/election.hpp"
#include "seqvote/rules.hpp"

namespace seqvote {

// Closed form for weighted constructive plurality under nonunique winners
// and a segment goal: some liked candidate's current score plus the whole
// pending manipulator weight must reach every hated candidate's current
// score plus the pending nonmanipulator weight (vacuously true when nothing
// is hated). Refuses other variants (WrongVariant).
bool decide_plurality_constructive_weighted(const Oms& oms,
                                            const Variant& variant);

// Closed form for weighted destructive plurality (nonunique winners, segment
// forbidden set): false when d tops sigma; otherwise the best liked current
// score plus manipulator weight must strictly beat the best hated current
// score plus nonmanipulator weight.
bool decide_plurality_destructive_weighted(const Oms& oms,
                                           const Variant& variant);

// Scoring-rule dispatch for weighted constructive instances: a flat vector
// is trivially true, a plurality-like vector (a > b = ... = b) reduces to
// plurality, and anything else is outside the polynomial cases (nullopt).
std::optional<bool> decide_scoring_weighted(const std::vector<long long>& alpha,
                                            const Oms& oms,
                                            const Variant& variant);

// The verdict must not depend on how score ties are broken; solvers are run
// under both orders in tests.
enum class TieBreak { name_ascending, name_descending };

// Greedy simulation for unweighted constructive k-approval / k-veto: each
// pending voter in order approves greedily for (manipulator) or against
// (nonmanipulator) the goal segment, and the goal is checked at the end.
bool decide_kapproval_kveto_unweighted(const Oms& oms, const Rule& rule,
                                       const Variant& variant,
                                       TieBreak tie = TieBreak::name_ascending);

// Threshold scan for unweighted constructive 1-veto: true iff d is at
// sigma-bottom or some veto threshold t separates what the manipulators can
// suppress from what the nonmanipulators can.
bool decide_1veto_threshold(const Oms& oms, const Variant& variant);

}  // namespace seqvote
