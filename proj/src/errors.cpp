#include "seqvote/errors.hpp"

namespace seqvote {

const char* err_name(Err code) {
  switch (code) {
    case Err::EmptyCandidateSet: return "EmptyCandidateSet";
    case Err::BadName: return "BadName";
    case Err::DuplicateName: return "DuplicateName";
    case Err::UnknownCandidateInBallot: return "UnknownCandidateInBallot";
    case Err::IncompleteBallot: return "IncompleteBallot";
    case Err::DistinguishedNotCandidate: return "DistinguishedNotCandidate";
    case Err::CurrentVoterNotManipulator: return "CurrentVoterNotManipulator";
    case Err::UnexpectedFixedBallot: return "UnexpectedFixedBallot";
    case Err::NegativeWeight: return "NegativeWeight";
    case Err::NonUnitWeightInUnweighted: return "NonUnitWeightInUnweighted";
    case Err::BadCoalitionBound: return "BadCoalitionBound";
    case Err::MTooSmall: return "MTooSmall";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::BadScoringVector: return "BadScoringVector";
    case Err::TooFewCandidates: return "TooFewCandidates";
    case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Err::WrongVariant: return "WrongVariant";
    case Err::MalformedQbf: return "MalformedQbf";
    case Err::TooLarge: return "TooLarge";
    case Err::NotThreeCnf: return "NotThreeCnf";
    case Err::VariableX1Used: return "VariableX1Used";
    case Err::NegativeDerivedWeight: return "NegativeDerivedWeight";
    case Err::EmptyCoalition: return "EmptyCoalition";
    case Err::OddSum: return "OddSum";
    case Err::BadPartitionInput: return "BadPartitionInput";
    case Err::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Err c, const std::string& msg)
    : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : Error(Err::Parse, "line " + std::to_string(line_) + ", col " +
                            std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

BudgetError::BudgetError(long long nodes_)
    : Error(Err::SearchBudgetExceeded,
            "game-tree search exceeded " + std::to_string(nodes_) + " nodes"),
      nodes(nodes_) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace seqvote
