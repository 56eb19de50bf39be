#pragma once

#include <stdexcept>
#include <string>

namespace seqvote {

// Every way an instance, a rule, or a request can be rejected. Kept as one
// enum so the CLI and the python module can map failures uniformly.
enum class Err {
  // instance validation
  EmptyCandidateSet,
  BadName,
  DuplicateName,
  UnknownCandidateInBallot,
  IncompleteBallot,
  DistinguishedNotCandidate,
  CurrentVoterNotManipulator,
  UnexpectedFixedBallot,
  NegativeWeight,
  NonUnitWeightInUnweighted,
  BadCoalitionBound,
  // scoring vectors
  MTooSmall,
  LengthMismatch,
  BadScoringVector,
  TooFewCandidates,
  // search
  SearchBudgetExceeded,
  // solver routing
  WrongVariant,
  // generators / reductions
  MalformedQbf,
  TooLarge,
  NotThreeCnf,
  VariableX1Used,
  NegativeDerivedWeight,
  EmptyCoalition,
  OddSum,
  BadPartitionInput,
  // file parsing
  Parse,
};

const char* err_name(Err code);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg);
};

// Positional parse failure: line and column are 1-based.
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& msg);
};

// The game-tree search outgrew its node budget.
struct BudgetError : Error {
  long long nodes;
  explicit BudgetError(long long nodes);
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace seqvote
