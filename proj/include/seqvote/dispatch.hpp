#pragma once

#include <string>
#include <string_view>

#include "seqvote/instance_io.hpp"
#include "seqvote/oracle.hpp"

namespace seqvote {

enum class SolverChoice { automatic, oracle, poly, greedy, veto_pnp, veto3 };

SolverChoice solver_from_name(std::string_view name);  // WrongVariant if unknown

struct Decision {
  bool yes = false;
  std::string solver;  // the solver that actually decided
};

// Decide one instance document. `automatic` picks the cheapest applicable
// solver without changing semantics; forcing an inapplicable solver throws
// WrongVariant.
Decision decide_doc(const InstanceDoc& doc, SolverChoice choice,
                    const SearchLimits& limits = {});

// Verdict bits for every choice of d, candidate declaration order.
std::string profile_doc(const InstanceDoc& doc, SolverChoice choice,
                        const SearchLimits& limits = {});

// The routing table's reasoning for this instance, one step per line.
std::string route_explanation(const InstanceDoc& doc);

}  // namespace seqvote
