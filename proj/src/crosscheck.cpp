#include "seqvote/crosscheck.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seqvote/dispatch.hpp"
#include "seqvote/instance_io.hpp"

namespace seqvote {

namespace {

// mt19937_64 plus modulo keeps the draw sequence identical across platforms,
// unlike std::uniform_int_distribution.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(unsigned long long seed) : g(seed) {}
  long long upto(long long n) {  // 0 .. n-1
    return n <= 1 ? 0 : static_cast<long long>(g() % static_cast<unsigned long long>(n));
  }
};

Ballot random_ballot(Rng& rng, const std::vector<std::string>& cands) {
  std::vector<std::string> order = cands;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1],
              order[static_cast<std::size_t>(rng.upto(static_cast<long long>(i)))]);
  return Ballot{std::move(order)};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

CrosscheckResult run_crosscheck(const CrosscheckOptions& options) {
  CrosscheckResult res;
  Rng rng(options.seed);
  for (const auto& token : options.rules) {
    Rule rule = parse_rule_tokens(split_ws(token));
    if (rule.kind == Rule::Kind::tiered) continue;  // fast solver IS the oracle

    // The m values this family admits.
    int lo = 2, hi = options.max_candidates;
    if (rule.kind == Rule::Kind::scoring) {
      lo = hi = static_cast<int>(rule.alpha.size());
    } else if (rule.k > 1) {
      lo = rule.k;  // scoring_vector needs m >= k
    }
    if (lo < 2 || lo > hi) continue;

    for (long long s = 0; s < options.samples; ++s) {
      int m = lo + static_cast<int>(rng.upto(hi - lo + 1));
      std::vector<std::string> cands;
      for (int i = 1; i <= m; ++i) cands.push_back("c" + std::to_string(i));

      InstanceDoc doc;
      doc.candidates = cands;
      doc.sigma = random_ballot(rng, cands);
      doc.distinguished = cands[static_cast<std::size_t>(rng.upto(m))];
      doc.rule = rule;
      doc.variant.target = Target::segment;
      doc.variant.winner_model = WinnerModel::nonunique;
      if (rule.is_plurality()) {
        doc.variant.direction = rng.upto(2) ? Direction::destructive
                                            : Direction::constructive;
        doc.variant.weighting = Weighting::weighted;
      } else if (rule.is_veto()) {
        doc.variant.direction = Direction::constructive;
        doc.variant.weighting =
            rng.upto(2) ? Weighting::unweighted : Weighting::weighted;
      } else if (rule.kind == Rule::Kind::scoring) {
        doc.variant.direction = Direction::constructive;
        doc.variant.weighting = Weighting::weighted;
      } else {
        doc.variant.direction = Direction::constructive;
        doc.variant.weighting = Weighting::unweighted;  // greedy needs it
      }
      bool weighted = doc.variant.weighting == Weighting::weighted;
      auto draw_weight = [&]() -> Big {
        return weighted ? Big(rng.upto(options.max_weight + 1)) : Big(1);
      };
      auto draw_role = [&]() {
        return rng.upto(2) ? Role::manipulator : Role::nonmanipulator;
      };

      long long nv = 1 + rng.upto(options.max_voters);
      long long npast = rng.upto(nv);
      int id = 1;
      for (long long i = 0; i < npast; ++i) {
        Voter v{"v" + std::to_string(id++), draw_weight(), draw_role()};
        doc.past.push_back(PastVote{std::move(v), random_ballot(rng, cands)});
      }
      doc.current = Voter{"u1", draw_weight(), Role::manipulator};
      for (long long i = npast + 1; i < nv; ++i)
        doc.future.push_back(
            Voter{"u" + std::to_string(i - npast + 1), draw_weight(), draw_role()});

      Decision fast = decide_doc(doc, SolverChoice::automatic);
      if (fast.solver == "oracle") continue;  // nothing to compare against
      bool truth;
      try {
        truth = decide_doc(doc, SolverChoice::oracle).yes;
      } catch (const BudgetError&) {
        continue;
      }
      bool fast_yes = fast.yes;
      if (options.mutant && res.checked == 0) fast_yes = !fast_yes;
      if (fast_yes != truth) {
        res.ok = false;
        res.summary = std::string("MISMATCH: ") + fast.solver + " says " +
                      (fast_yes ? "YES" : "NO") + ", oracle says " +
                      (truth ? "YES" : "NO");
        InstanceDoc bad = doc;
        bad.label = truth;
        res.counterexample = serialize_instance(bad);
        return res;
      }
      ++res.checked;
    }
  }
  res.summary = "OK " + std::to_string(res.checked);
  return res;
}

}  // namespace seqvote
