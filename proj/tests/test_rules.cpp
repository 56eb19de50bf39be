#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seqvote/rules.hpp"

using namespace seqvote;
using testbrute::all_ballots;
using testbrute::bal;
using testbrute::M;
using testbrute::N;
using testbrute::thrown_code;

namespace {

PastVote vote(const std::string& name, Big w, const std::string& ballot) {
  return PastVote{Voter{name, std::move(w), N}, bal(ballot)};
}

}  // namespace

TEST_CASE("positional score vectors") {
  CHECK(scoring_vector(Rule::approval(2), 4) ==
        std::vector<long long>{1, 1, 0, 0});
  CHECK(scoring_vector(Rule::kveto(1), 3) == std::vector<long long>{1, 1, 0});
  CHECK(scoring_vector(Rule::approval(1), 1) == std::vector<long long>{1});
  CHECK(scoring_vector(Rule::scoring({2, 1, 0}), 3) ==
        std::vector<long long>{2, 1, 0});

  CHECK(thrown_code([] { scoring_vector(Rule::approval(2), 1); }) ==
        Err::MTooSmall);
  CHECK(thrown_code([] { scoring_vector(Rule::kveto(3), 2); }) ==
        Err::MTooSmall);
  CHECK(thrown_code([] { scoring_vector(Rule::scoring({2, 1}), 3); }) ==
        Err::LengthMismatch);
  CHECK(thrown_code([] { Rule::scoring({1, 2}); }) == Err::BadScoringVector);
  CHECK(thrown_code([] { Rule::scoring({1, -1}); }) == Err::BadScoringVector);
  CHECK(thrown_code([] { Rule::approval(0); }) == Err::BadScoringVector);
}

TEST_CASE("winner sets under small profiles") {
  std::vector<std::string> ab = {"a", "b"};
  CHECK(winners(Rule::plurality(), ab,
                {vote("v1", 2, "a>b"), vote("v2", 1, "b>a")}) ==
        std::vector<std::string>{"a"});

  std::vector<std::string> abc = {"a", "b", "c"};
  CHECK(winners(Rule::veto(), abc, {vote("v1", 1, "a>b>c")}) ==
        std::vector<std::string>{"a", "b"});

  // a flat vector scores everyone identically, so everyone always wins
  CHECK(winners(Rule::scoring({1, 1}), ab, {vote("v1", 5, "b>a")}) == ab);
  CHECK(winners(Rule::scoring({1, 1}), ab, {}) == ab);

  CHECK(thrown_code([&] { winners(Rule::plurality(), {}, {}); }) ==
        Err::EmptyCandidateSet);
  CHECK(thrown_code([&] {
          winners(Rule::plurality(), ab, {vote("v1", 1, "a")});
        }) == Err::IncompleteBallot);
}

TEST_CASE("winners ignore ballot order and weight splitting") {
  std::mt19937_64 rng(411u);
  std::vector<std::string> cands = {"a", "b", "c"};
  auto space = all_ballots(cands);
  std::vector<Rule> rules = {Rule::plurality(), Rule::veto(),
                             Rule::scoring({2, 1, 0})};

  for (int trial = 0; trial < 60; ++trial) {
    std::vector<PastVote> votes;
    int nv = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nv; ++i)
      votes.push_back(vote("v" + std::to_string(i), 1 + Big(rng() % 4),
                           "a>b>c"));
    for (auto& pv : votes) pv.ballot = space[rng() % space.size()];
    const Rule& rule = rules[trial % rules.size()];
    auto base = winners(rule, cands, votes);

    std::vector<PastVote> shuffled = votes;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng() % i]);
    CHECK(winners(rule, cands, shuffled) == base);

    // split the first ballot's weight across two identical ballots
    if (votes[0].voter.weight >= 2) {
      std::vector<PastVote> split = votes;
      Big w = split[0].voter.weight;
      split[0].voter.weight = w - 1;
      split.push_back(PastVote{Voter{"vx", 1, N}, split[0].ballot});
      CHECK(winners(rule, cands, split) == base);
    }
  }
}

TEST_CASE("k-approval and k-veto agree with their generic scoring vectors") {
  std::mt19937_64 rng(412u);
  std::vector<std::string> cands = {"a", "b", "c", "d"};
  auto space = all_ballots(cands);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<PastVote> votes;
    int nv = static_cast<int>(rng() % 5);
    for (int i = 0; i < nv; ++i)
      votes.push_back(PastVote{Voter{"v" + std::to_string(i), Big(rng() % 4), N},
                               space[rng() % space.size()]});
    for (int k = 1; k <= 3; ++k) {
      CHECK(winners(Rule::approval(k), cands, votes) ==
            winners(Rule::scoring(scoring_vector(Rule::approval(k), 4)), cands,
                    votes));
      CHECK(winners(Rule::kveto(k), cands, votes) ==
            winners(Rule::scoring(scoring_vector(Rule::kveto(k), 4)), cands,
                    votes));
    }
  }
}

TEST_CASE("bit decoding reads the bottom pairs of the ballot") {
  // width 1: bottom two are m (last) then n above it -> pair (m, n) -> bit 0
  CHECK(decode_bits(bal("c>n>m"), "c", 1) == std::vector<int>{0});
  // mirrored bottom pair -> bit 1
  CHECK(decode_bits(bal("c>m>n"), "c", 1) == std::vector<int>{1});
  // width 2: bottom four named p,q,r,s from last to 4th-from-last
  CHECK(decode_bits(bal("c>s>r>q>p"), "c", 2) == std::vector<int>{0, 0});
  CHECK(decode_bits(bal("c>s>r>p>q"), "c", 2) == std::vector<int>{1, 0});
  CHECK(decode_bits(bal("c>r>s>q>p"), "c", 2) == std::vector<int>{0, 1});

  CHECK(thrown_code([] { decode_bits(bal("c>a>b>d"), "c", 2); }) ==
        Err::TooFewCandidates);
  CHECK(thrown_code([] { decode_bits(bal("a>b>c"), "z", 1); }) ==
        Err::UnknownCandidateInBallot);
}

TEST_CASE("bit decoding ignores everything above the bottom pairs") {
  // five candidates, width 1: only the bottom two matter
  std::vector<std::string> tops = {"t1", "t2", "c"};
  std::sort(tops.begin(), tops.end());
  do {
    Ballot b;
    b.order = tops;
    b.order.push_back("n");
    b.order.push_back("m");
    if (std::find(tops.begin(), tops.end(), "c") == tops.end()) continue;
    CHECK(decode_bits(b, "c", 1) == std::vector<int>{0});
  } while (std::next_permutation(tops.begin(), tops.end()));
}

TEST_CASE("tiered rule: formula true means everyone wins") {
  std::vector<std::string> cands = {"x_{1,1}", "x_{1,1}a", "x_{1,1}b"};
  // bottom pair (x_{1,1}b, x_{1,1}a) reads bit 1: the formula holds
  std::vector<PastVote> yes = {
      PastVote{Voter{"1", 1, M}, bal("x_{1,1}>x_{1,1}a>x_{1,1}b")}};
  CHECK(tiered_winners(cands, yes) == cands);
  CHECK(winners(Rule::tiered(), cands, yes) == cands);

  // bottom pair (x_{1,1}a, x_{1,1}b) reads bit 0: nobody wins
  std::vector<PastVote> no = {
      PastVote{Voter{"1", 1, M}, bal("x_{1,1}>x_{1,1}b>x_{1,1}a")}};
  CHECK(tiered_winners(cands, no).empty());
}

TEST_CASE("tiered rule rejects malformed encodings by electing nobody") {
  SUBCASE("least candidate name is not a formula") {
    std::vector<std::string> cands = {"a", "b", "c"};
    std::vector<PastVote> votes = {PastVote{Voter{"1", 1, N}, bal("a>b>c")}};
    CHECK(tiered_winners(cands, votes).empty());
  }
  SUBCASE("fewer voters than blocks") {
    std::string f = "x_{1,1}&x_{2,1}";
    std::vector<std::string> cands = {f, f + "a", f + "b"};
    std::vector<PastVote> votes = {
        PastVote{Voter{"1", 1, M}, bal(f + ">" + f + "a>" + f + "b")}};
    CHECK(tiered_winners(cands, votes).empty());
  }
  SUBCASE("a block with no variable in the matrix") {
    // x_{2,1} alone leaves block 1 uninhabited
    std::string f = "x_{2,1}";
    std::vector<std::string> cands = {f, f + "a", f + "b"};
    std::vector<PastVote> votes = {
        PastVote{Voter{"1", 1, M}, bal(f + ">" + f + "a>" + f + "b")},
        PastVote{Voter{"2", 1, N}, bal(f + ">" + f + "a>" + f + "b")}};
    CHECK(tiered_winners(cands, votes).empty());
  }
  SUBCASE("too few candidates for the width") {
    // x_{1,2} needs 1 + 2*2 = 5 candidates
    std::string f = "x_{1,1}&x_{1,2}";
    std::vector<std::string> cands = {f, f + "a", f + "b"};
    std::vector<PastVote> votes = {
        PastVote{Voter{"1", 1, M}, bal(f + ">" + f + "a>" + f + "b")}};
    CHECK(tiered_winners(cands, votes).empty());
  }
}

TEST_CASE("tiered rule reads ballots, not weights, and pays no attention to roles") {
  std::vector<std::string> cands = {"x_{1,1}", "x_{1,1}a", "x_{1,1}b"};
  Ballot b = bal("x_{1,1}>x_{1,1}a>x_{1,1}b");
  auto heavy = tiered_winners(cands, {PastVote{Voter{"1", 999, N}, b}});
  auto light = tiered_winners(cands, {PastVote{Voter{"1", 0, M}, b}});
  CHECK(heavy == light);
  CHECK(heavy == cands);
}

TEST_CASE("tiered winner sets are all-or-none") {
  std::mt19937_64 rng(413u);
  std::vector<std::string> cands = {"x_{1,1}|x_{2,1}", "y", "z"};
  auto space = all_ballots(cands);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<PastVote> votes;
    int nv = static_cast<int>(rng() % 4);
    for (int i = 0; i < nv; ++i)
      votes.push_back(PastVote{Voter{"v" + std::to_string(i), 1, N},
                               space[rng() % space.size()]});
    auto win = tiered_winners(cands, votes);
    CHECK((win.empty() || win.size() == cands.size()));
  }
}
