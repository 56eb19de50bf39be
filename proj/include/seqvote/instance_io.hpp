#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqvote/election.hpp"
#include "seqvote/formula.hpp"
#include "seqvote/reductions.hpp"
#include "seqvote/rules.hpp"

namespace seqvote {

// One instance file, before semantic validation. Sections:
//   candidates: a b c
//   sigma: a>b>c
//   d: b                  (optional; profiles omit it)
//   rule: plurality | veto | approval K | kveto K | scoring a1 a2 .. | tiered
//   variant: constructive|destructive segment|pinpoint weighted|unweighted
//            nonunique|unique [freeform] [bound=K]
//   voters:
//     <name> manip|nonmanip w=<int> vote: a>b>c     cast vote
//     <name> manip|nonmanip w=<int> pending [vote: ...]   the current voter
//     <name> manip|nonmanip w=<int>                 future voter
//   a line "unordered" instead of pending/future lines starts the
//   schedule-free remaining block.
// '#' starts a comment; "# label: YES|NO" records the generator's ground
// truth.
struct InstanceDoc {
  std::vector<std::string> candidates;
  Ballot sigma;
  std::string distinguished;  // empty = absent
  Rule rule;
  Variant variant;
  bool schedule_free = false;
  std::vector<PastVote> past;
  std::optional<Voter> current;
  std::optional<Ballot> current_fixed;
  std::vector<Voter> future;
  std::vector<Voter> remaining;  // schedule-free only
  std::optional<bool> label;

  Oms to_oms() const;  // schedule_free must be false
  ScheduleFreeState to_state() const;
};

InstanceDoc parse_instance(std::string_view text);  // ParseError
std::string serialize_instance(const InstanceDoc& doc);

InstanceDoc doc_from(const GenResult& gen, std::optional<bool> label);

// Rule token helpers shared by the parser, the CLI and the bindings.
Rule parse_rule_tokens(const std::vector<std::string>& tokens);

// Minimal DIMACS cnf: optional 'c' comments, a 'p cnf <vars> <clauses>'
// header, then clauses as 0-terminated literal runs.
Cnf parse_dimacs(std::string_view text);
std::string dimacs_text(const Cnf& f);
// Two DIMACS blocks split by a line containing exactly "%".
std::pair<Cnf, Cnf> parse_dimacs_pair(std::string_view text);

}  // namespace seqvote
