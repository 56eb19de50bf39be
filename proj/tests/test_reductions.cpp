#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seqvote/oracle.hpp"
#include "seqvote/reductions.hpp"
#include "seqvote/veto.hpp"

using namespace seqvote;
using testbrute::M;
using testbrute::N;
using testbrute::thrown_code;

namespace {

// assignment (x_1 most significant) read as a number
long long asnum(const std::vector<bool>& bits) {
  long long v = 0;
  for (bool b : bits) v = v * 2 + (b ? 1 : 0);
  return v;
}

std::optional<std::vector<bool>> lex_greatest(
    int n, const std::function<bool(const std::vector<bool>&)>& pred) {
  for (long long a = (1LL << n) - 1; a >= 0; --a) {
    std::vector<bool> bits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<size_t>(i)] = (a >> (n - 1 - i)) & 1;
    if (pred(bits)) return bits;
  }
  return std::nullopt;
}

// random 3cnf over x_2..x_3 only, leaving x_1 free for the hat construction
Cnf random_cnf_no_x1(std::mt19937_64& rng, int nclauses) {
  Cnf f;
  f.vars = 3;
  for (int j = 0; j < nclauses; ++j) {
    std::vector<int> cl;
    for (int t = 0; t < 3; ++t) {
      int v = 2 + static_cast<int>(rng() % 2);
      cl.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(cl);
  }
  return f;
}

void check_subset_sum_image(const Cnf& f) {
  SubsetSum sp = wagner_subset_sum(f);
  REQUIRE(sp.items.size() <= 12);
  CHECK(sp.target_base > 0);
  for (const auto& it : sp.items) CHECK(it > 0);

  std::set<Big> sums;
  for (unsigned mask = 0; mask < (1u << sp.items.size()); ++mask) {
    Big s = 0;
    for (size_t i = 0; i < sp.items.size(); ++i)
      if (mask & (1u << i)) s += sp.items[i];
    sums.insert(s);
  }
  const int n = f.vars;
  for (long long a = 0; a < (1LL << n); ++a) {
    std::vector<bool> bits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<size_t>(i)] = (a >> (n - 1 - i)) & 1;
    CHECK(sums.count(sp.target_base + a) ==
          static_cast<size_t>(cnf_eval(f, bits) ? 1 : 0));
  }
  for (long long k = (1LL << n); k <= 2 * ((1LL << n) - 1); ++k)
    CHECK(sums.count(sp.target_base + k) == 0);
}

}  // namespace

TEST_CASE("quantified formulas parse, render and evaluate") {
  Qbf q1 = parse_qbf("E x11 : x11");
  CHECK(qbf_eval(q1));

  Qbf q2 = parse_qbf("E x11 A x21 : x11 & x21");
  CHECK(!qbf_eval(q2));

  Qbf q3 = parse_qbf("E x11 A x21 : x11 | x21");
  CHECK(qbf_eval(q3));

  // the universal block genuinely quantifies
  CHECK(!qbf_eval(parse_qbf("E x11 A x21 : x21 & (x11 | ~x11)")));
  CHECK(qbf_eval(parse_qbf("E x11 A x21 : x11 & (x21 | ~x21)")));
  CHECK(!qbf_eval(parse_qbf("E x11 A x21 : (x11 | ~x21) & (~x11 | x21)")));

  // wider blocks and the three accepted variable spellings
  Qbf wide = parse_qbf("E x1,1 x12 A x_{2,1} : (x11 | x21) & (x12 | ~x21)");
  CHECK(qbf_eval(wide));
  Qbf again = parse_qbf(qbf_text(wide));
  CHECK(qbf_text(again) == qbf_text(wide));
  CHECK(qbf_eval(again));

  SUBCASE("rejects what the prenex grammar cannot mean") {
    // blocks alternate starting existential, so a leading universal has no form
    CHECK(thrown_code([] { parse_qbf("A x11 : x11"); }) == Err::MalformedQbf);
    CHECK(thrown_code([] { parse_qbf("E x11 : x21"); }) == Err::MalformedQbf);
    CHECK(thrown_code([] { parse_qbf("E x11 A x21 : x11"); }) ==
          Err::MalformedQbf);
    CHECK(thrown_code([] { parse_qbf("E x11 x11"); }) == Err::MalformedQbf);
    // a broken matrix is a positional parse error, not a structural one
    CHECK(thrown_code([] { parse_qbf("E x11 : x11 &"); }) == Err::Parse);
    CHECK(thrown_code([] { parse_qbf("E x12 : x12"); }) == Err::MalformedQbf);
  }

  SUBCASE("refuses to evaluate beyond the variable budget") {
    Qbf big;
    big.widths = {11, 10};
    big.matrix = f_and(f_var(1, 11), f_var(2, 10));
    validate_qbf(big);
    CHECK(thrown_code([&] { qbf_eval(big); }) == Err::TooLarge);
  }
}

TEST_CASE("quantified formulas embed as tiered-rule games") {
  Qbf q = parse_qbf("E x11 A x21 : x11 & x21");
  GenResult gen = gen_qbf_oms(q);

  CHECK(gen.rule.kind == Rule::Kind::tiered);
  CHECK(gen.variant.direction == Direction::constructive);
  CHECK(gen.variant.target == Target::segment);
  CHECK(gen.variant.weighting == Weighting::unweighted);
  CHECK(gen.variant.winner_model == WinnerModel::nonunique);
  CHECK(!gen.variant.freeform);

  const std::string name = "x_{1,1}&x_{2,1}";
  CHECK(gen.oms.distinguished == name);
  REQUIRE(gen.oms.candidates.size() == 3);
  CHECK(gen.oms.candidates[0] == name);
  CHECK(gen.oms.candidates[1] == name + "!");
  CHECK(gen.oms.candidates[2] == name + "!!");
  CHECK(gen.oms.sigma.order == gen.oms.candidates);

  CHECK(gen.oms.snapshot.past.empty());
  CHECK(gen.oms.snapshot.current.name == "1");
  CHECK(gen.oms.snapshot.current.role == M);
  REQUIRE(gen.oms.snapshot.future.size() == 1);
  CHECK(gen.oms.snapshot.future[0].name == "2");
  CHECK(gen.oms.snapshot.future[0].role == N);

  SUBCASE("the game value is the formula value") {
    const char* sources[] = {
        "E x11 : x11",
        "E x11 : ~x11",
        "E x11 A x21 : x11 & x21",
        "E x11 A x21 : x11 | x21",
        "E x11 A x21 : x21 & (x11 | ~x11)",
        "E x11 A x21 : (x11 | ~x21) & (~x11 | x21)",
        "E x11 A x21 E x31 : (x11 | x21) & (x31 | ~x21)",
        "E x11 A x21 E x31 : (x11 & x31) | (x21 & ~x31)",
        "E x1,1 x12 A x21 : (x11 | x21) & (x12 | ~x21)",
        "E x11 A x21 x22 : x11 & (x21 | ~x21) & (x22 | ~x22)",
    };
    for (const char* src : sources) {
      Qbf f = parse_qbf(src);
      GenResult g = gen_qbf_oms(f);
      CAPTURE(src);
      CHECK(decide_online(g.oms, g.rule, g.variant) == qbf_eval(f));
    }
  }
}

TEST_CASE("even-split decision on multisets") {
  CHECK(partition_brute({1, 1}));
  CHECK(!partition_brute({1, 3}));
  CHECK(partition_brute({3, 2, 1}));
  CHECK(partition_brute({}));
  CHECK(thrown_code([] { partition_brute({1, 1, 1}); }) == Err::OddSum);
  CHECK(thrown_code([] { partition_brute({Big(-1), Big(1)}); }) ==
        Err::BadPartitionInput);
  // the size guard fires before the parity guard
  std::vector<Big> ones(25, Big(1));
  CHECK(thrown_code([&] { partition_brute(ones); }) == Err::TooLarge);
}

TEST_CASE("even-split embeds as weighted plurality under unique winners") {
  SUBCASE("destructive flavor structure") {
    GenResult g = gen_partition_plurality_uw({1, 1}, 2, PartitionFlavor::destructive);
    CHECK(g.rule.is_plurality());
    CHECK(g.variant.direction == Direction::destructive);
    CHECK(g.variant.winner_model == WinnerModel::unique);
    CHECK(g.variant.weighting == Weighting::weighted);
    CHECK(g.oms.candidates == std::vector<std::string>{"c1", "c2"});
    CHECK(g.oms.distinguished == "c1");
    CHECK(g.oms.snapshot.past.empty());  // two candidates need no scaffolding
    CHECK(g.oms.snapshot.current.name == "u1");
    CHECK(g.oms.snapshot.current.weight == 1);
    CHECK(g.oms.snapshot.current.role == M);
    REQUIRE(g.oms.snapshot.future.size() == 1);
    CHECK(g.oms.snapshot.future[0].role == M);

    GenResult g3 =
        gen_partition_plurality_uw({1, 1, 2}, 3, PartitionFlavor::destructive);
    REQUIRE(g3.oms.snapshot.past.size() == 1);
    CHECK(g3.oms.snapshot.past[0].voter.weight == 3);  // (m-1)*half - 1
    CHECK(g3.oms.snapshot.past[0].ballot.order.front() == "c1");
    CHECK(g3.oms.snapshot.current.weight == 2);  // scaled by m-1
  }

  SUBCASE("destructive flavor verdicts") {
    for (auto& [ws, expect] :
         std::vector<std::pair<std::vector<Big>, bool>>{
             {{1, 1}, true}, {{1, 3}, false}, {{2, 4, 6}, true}, {{2, 4, 8}, false}}) {
      CHECK(partition_brute(ws) == expect);
      for (int m : {2, 3}) {
        GenResult g = gen_partition_plurality_uw(ws, m, PartitionFlavor::destructive);
        CAPTURE(m);
        CHECK(decide_online(g.oms, g.rule, g.variant) == expect);
      }
    }
  }

  SUBCASE("complement flavor structure and verdicts") {
    GenResult g =
        gen_partition_plurality_uw({1, 1}, 2, PartitionFlavor::constructive_complement);
    CHECK(g.variant.direction == Direction::constructive);
    CHECK(g.oms.distinguished == "c2");
    CHECK(g.oms.snapshot.current.name == "u0");
    CHECK(g.oms.snapshot.current.weight == 0);
    REQUIRE(g.oms.snapshot.future.size() == 2);
    CHECK(g.oms.snapshot.future[0].role == N);
    CHECK(g.oms.snapshot.future[1].role == N);

    for (auto& [ws, expect] : std::vector<std::pair<std::vector<Big>, bool>>{
             {{1, 1}, false}, {{1, 3}, true}, {{2, 4, 6}, false}}) {
      for (int m : {2, 3}) {
        GenResult gg =
            gen_partition_plurality_uw(ws, m, PartitionFlavor::constructive_complement);
        CAPTURE(m);
        CHECK(decide_online(gg.oms, gg.rule, gg.variant) == expect);
      }
    }
  }

  SUBCASE("input guards") {
    CHECK(thrown_code([] {
            gen_partition_plurality_uw({1, 1}, 1, PartitionFlavor::destructive);
          }) == Err::TooFewCandidates);
    CHECK(thrown_code([] {
            gen_partition_plurality_uw({0, 2}, 2, PartitionFlavor::destructive);
          }) == Err::BadPartitionInput);
    CHECK(thrown_code([] {
            gen_partition_plurality_uw({1, 1, 1}, 2, PartitionFlavor::destructive);
          }) == Err::OddSum);
    CHECK(thrown_code([] {
            gen_partition_plurality_uw({}, 2, PartitionFlavor::destructive);
          }) == Err::BadPartitionInput);
  }
}

TEST_CASE("even-split embeds as three-candidate weighted veto") {
  GenResult g = gen_partition_veto3({1, 1});
  CHECK(g.rule.is_veto());
  CHECK(g.oms.candidates == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.oms.distinguished == "b");
  REQUIRE(g.oms.snapshot.past.size() == 1);
  CHECK(g.oms.snapshot.past[0].voter.weight == 0);  // half - 1
  CHECK(g.oms.snapshot.past[0].ballot.order.back() == "c");
  CHECK(g.oms.snapshot.current.weight == 0);
  CHECK(g.oms.snapshot.current.role == M);
  REQUIRE(g.oms.snapshot.future.size() == 2);

  for (auto& [ws, solvable] : std::vector<std::pair<std::vector<Big>, bool>>{
           {{1, 1}, true}, {{1, 3}, false}, {{2, 2}, true}, {{2, 4, 6}, true},
           {{2, 4, 8}, false}}) {
    GenResult gg = gen_partition_veto3(ws);
    // the coalition wins exactly when the multiset does NOT split evenly
    CHECK(decide_veto3_weighted(gg.oms, gg.variant) == !solvable);
    CHECK(decide_veto_weighted(gg.oms, gg.variant) == !solvable);
    CHECK(decide_online(gg.oms, gg.rule, gg.variant) == !solvable);
  }
}

TEST_CASE("subset-sum image of a 3cnf formula") {
  Cnf f;
  f.vars = 1;
  f.clauses = {{1, 1, 1}};
  SubsetSum sp = wagner_subset_sum(f);
  CHECK(sp.items == std::vector<Big>{115, 6, 36, 36});
  CHECK(sp.target_base == 114);
  check_subset_sum_image(f);

  Cnf taut;
  taut.vars = 1;
  taut.clauses = {{1, 1, -1}};
  check_subset_sum_image(taut);

  Cnf two;
  two.vars = 2;
  two.clauses = {{1, 2, 2}};
  check_subset_sum_image(two);

  Cnf contradiction;
  contradiction.vars = 1;
  contradiction.clauses = {{1, 1, 1}, {-1, -1, -1}};
  check_subset_sum_image(contradiction);

  std::mt19937_64 rng(451u);
  for (int trial = 0; trial < 30; ++trial) {
    Cnf r;
    r.vars = 2 + static_cast<int>(rng() % 2);
    int nclauses = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < nclauses; ++j) {
      std::vector<int> cl;
      for (int t = 0; t < 3; ++t) {
        int v = 1 + static_cast<int>(rng() % r.vars);
        cl.push_back(rng() % 2 ? v : -v);
      }
      r.clauses.push_back(cl);
    }
    check_subset_sum_image(r);
  }

  Cnf bad;
  bad.vars = 1;
  bad.clauses = {{1, 1}};
  CHECK(thrown_code([&] { wagner_subset_sum(bad); }) == Err::NotThreeCnf);
}

TEST_CASE("lexicographically greatest satisfying assignments") {
  Cnf f;
  f.vars = 2;
  f.clauses = {{1, 1, 1}, {-2, -2, -2}};
  CHECK(maxsatasg_brute(f) == std::vector<bool>{true, false});

  Cnf unsat;
  unsat.vars = 1;
  unsat.clauses = {{1, 1, 1}, {-1, -1, -1}};
  CHECK(maxsatasg_brute(unsat) == std::nullopt);

  Cnf disj;
  disj.vars = 2;
  disj.clauses = {{1, 1, 2}};
  CHECK(maxsatasg_brute(disj) == std::vector<bool>{true, true});

  Cnf big;
  big.vars = 23;
  big.clauses = {{1, 1, 1}};
  CHECK(thrown_code([&] { maxsatasg_brute(big); }) == Err::TooLarge);

  CHECK(maxsatasg_equal(f, f));
  CHECK(!maxsatasg_equal(f, unsat));
  CHECK(!maxsatasg_equal(unsat, unsat));  // no maximum exists on either side
  CHECK(!maxsatasg_equal(f, disj));
}

TEST_CASE("hat formulas carry the comparison into one horizon") {
  Cnf usesX1;
  usesX1.vars = 2;
  usesX1.clauses = {{1, 2, 2}};
  Cnf clean;
  clean.vars = 2;
  clean.clauses = {{2, 2, 2}};
  CHECK(thrown_code([&] { build_hat_formulas(usesX1, clean); }) ==
        Err::VariableX1Used);
  CHECK(thrown_code([&] { build_hat_formulas(clean, usesX1); }) ==
        Err::VariableX1Used);

  std::mt19937_64 rng(452u);
  for (int trial = 0; trial < 50; ++trial) {
    Cnf phi = random_cnf_no_x1(rng, 1 + static_cast<int>(rng() % 2));
    Cnf psi = random_cnf_no_x1(rng, 1 + static_cast<int>(rng() % 2));
    HatPair hat = build_hat_formulas(phi, psi);
    CHECK(is_three_cnf(hat.phi_hat));
    CHECK(is_three_cnf(hat.psi_hat));
    CHECK(hat.n_hat > phi.vars);
    CHECK(hat.phi_hat.vars == hat.n_hat);
    CHECK(hat.psi_hat.vars == hat.n_hat);

    // the disjunction side is always satisfiable (set x_1 false)...
    auto maxPsiHat = maxsatasg_brute(hat.psi_hat);
    REQUIRE(maxPsiHat.has_value());

    // ...and its maximum starts with the maximum of (phi OR psi OR ~x_1)
    auto direct = lex_greatest(phi.vars, [&](const std::vector<bool>& a) {
      return cnf_eval(phi, a) || cnf_eval(psi, a) || !a[0];
    });
    REQUIRE(direct.has_value());
    for (int i = 0; i < phi.vars; ++i)
      CHECK((*maxPsiHat)[static_cast<size_t>(i)] == (*direct)[static_cast<size_t>(i)]);

    // the conjunction side is satisfiable exactly when phi AND psi AND x_1 is,
    // and comparing the two maxima decides equality of the original maxima
    auto maxPhiHat = maxsatasg_brute(hat.phi_hat);
    bool reduced = maxPhiHat.has_value() &&
                   asnum(*maxPhiHat) >= asnum(*maxPsiHat);
    CHECK(reduced == maxsatasg_equal(phi, psi));
  }
}

TEST_CASE("equal-maximum comparison embeds as weighted veto") {
  Cnf same;
  same.vars = 2;
  same.clauses = {{2, 2, 2}};

  Cnf unsat;
  unsat.vars = 2;
  unsat.clauses = {{2, 2, 2}, {-2, -2, -2}};

  Cnf other;
  other.vars = 2;
  other.clauses = {{-2, -2, -2}};

  GenResult g = gen_maxsatasg_veto_oms(same, same);
  CHECK(g.rule.is_veto());
  CHECK(g.variant.direction == Direction::constructive);
  CHECK(g.variant.winner_model == WinnerModel::nonunique);
  CHECK(g.variant.weighting == Weighting::weighted);
  CHECK(g.oms.distinguished == "b");
  REQUIRE(g.oms.candidates.size() == 4);
  CHECK(g.oms.snapshot.past.size() == 4);  // one guard voter per candidate
  CHECK(g.oms.snapshot.current.role == M);

  CHECK(decide_veto_weighted(g.oms, g.variant));

  GenResult gUnsat = gen_maxsatasg_veto_oms(unsat, same);
  CHECK(!decide_veto_weighted(gUnsat.oms, gUnsat.variant));

  GenResult gOther = gen_maxsatasg_veto_oms(same, other);
  CHECK(!decide_veto_weighted(gOther.oms, gOther.variant));

  std::mt19937_64 rng(453u);
  for (int trial = 0; trial < 24; ++trial) {
    Cnf phi = random_cnf_no_x1(rng, 1 + static_cast<int>(rng() % 2));
    Cnf psi = random_cnf_no_x1(rng, 1 + static_cast<int>(rng() % 2));
    GenResult gg = gen_maxsatasg_veto_oms(phi, psi);
    CHECK(decide_veto_weighted(gg.oms, gg.variant) == maxsatasg_equal(phi, psi));
  }
}

TEST_CASE("one-shot coalition manipulation embeds as a pending block") {
  StandardWcm wcm;
  wcm.candidates = {"a", "b", "c"};
  wcm.rule = Rule::plurality();
  wcm.fixed_votes.push_back(
      PastVote{Voter{"s1", 2, N}, testbrute::bal("b>a>c")});
  wcm.coalition_weights = {1, 1};
  wcm.target = "b";

  SUBCASE("constructive puts the target on top of sigma") {
    GenResult g = embed_standard_wcm(wcm, Direction::constructive);
    CHECK(g.oms.sigma.order == std::vector<std::string>{"b", "a", "c"});
    CHECK(g.oms.distinguished == "b");
    CHECK(g.variant.direction == Direction::constructive);
    CHECK(g.variant.winner_model == WinnerModel::nonunique);
    REQUIRE(g.oms.snapshot.future.size() == 1);
    CHECK(g.oms.snapshot.current.name == "t1");
    CHECK(g.oms.snapshot.current.role == M);
    CHECK(g.oms.snapshot.future[0].role == M);
    CHECK(g.oms.snapshot.past.size() == 1);
    CHECK(decide_online(g.oms, g.rule, g.variant) ==
          testbrute::brute_standard_wcm(wcm, Direction::constructive));
  }

  SUBCASE("destructive puts the target at the bottom") {
    GenResult g = embed_standard_wcm(wcm, Direction::destructive);
    CHECK(g.oms.sigma.order == std::vector<std::string>{"a", "c", "b"});
    CHECK(decide_online(g.oms, g.rule, g.variant) ==
          testbrute::brute_standard_wcm(wcm, Direction::destructive));
  }

  SUBCASE("coalition names sidestep the fixed voters") {
    StandardWcm clash = wcm;
    clash.fixed_votes[0].voter.name = "t1";
    GenResult g = embed_standard_wcm(clash, Direction::constructive);
    CHECK(g.oms.snapshot.current.name == "t1'");
  }

  SUBCASE("an empty coalition is refused") {
    StandardWcm none = wcm;
    none.coalition_weights.clear();
    CHECK(thrown_code([&] { embed_standard_wcm(none, Direction::constructive); }) ==
          Err::EmptyCoalition);
  }

  SUBCASE("embedded verdicts match one-shot enumeration") {
    std::mt19937_64 rng(454u);
    for (int trial = 0; trial < 40; ++trial) {
      StandardWcm r;
      int m = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < m; ++i) r.candidates.push_back(std::string(1, char('a' + i)));
      r.rule = rng() % 2 ? Rule::plurality() : Rule::veto();
      auto space = testbrute::all_ballots(r.candidates);
      int nfixed = static_cast<int>(rng() % 3);
      for (int i = 0; i < nfixed; ++i)
        r.fixed_votes.push_back(PastVote{
            Voter{"s" + std::to_string(i), Big(rng() % 3), N},
            space[rng() % space.size()]});
      int t = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < t; ++i) r.coalition_weights.push_back(Big(rng() % 3));
      r.target = r.candidates[rng() % r.candidates.size()];
      Direction dir = rng() % 2 ? Direction::constructive : Direction::destructive;
      GenResult g = embed_standard_wcm(r, dir);
      CHECK(decide_online(g.oms, g.rule, g.variant) ==
            testbrute::brute_standard_wcm(r, dir));
    }
  }
}
