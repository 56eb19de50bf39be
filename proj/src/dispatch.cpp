#include "seqvote/dispatch.hpp"

#include <vector>

#include "seqvote/poly.hpp"
#include "seqvote/veto.hpp"

namespace seqvote {

namespace {

const char* solver_label(SolverChoice c) {
  switch (c) {
    case SolverChoice::oracle: return "oracle";
    case SolverChoice::poly: return "poly";
    case SolverChoice::greedy: return "greedy";
    case SolverChoice::veto_pnp: return "veto-pnp";
    case SolverChoice::veto3: return "veto3";
    case SolverChoice::automatic: break;
  }
  return "auto";
}

struct Route {
  SolverChoice choice = SolverChoice::oracle;
  std::vector<std::string> reasons;
};

bool scoring_poly_applicable(const std::vector<long long>& a) {
  if (a.empty()) return false;
  if (a.front() == a.back()) return true;  // flat: every candidate always ties
  return a.size() >= 2 && a[0] > a[1] && a[1] == a.back();
}

// The automatic routing table for ordered (non-schedule-free) instances.
Route plan_route(const InstanceDoc& doc) {
  const Rule& rule = doc.rule;
  const Variant& v = doc.variant;
  Route r;
  auto pick = [&](SolverChoice c, std::string why) {
    r.choice = c;
    r.reasons.push_back(std::move(why));
  };
  if (rule.kind == Rule::Kind::tiered) {
    pick(SolverChoice::oracle, "tiered winners need the full game tree");
    return r;
  }
  if (v.freeform) {
    pick(SolverChoice::oracle, "freeform plies fall back to the game tree");
    return r;
  }
  if (v.winner_model == WinnerModel::unique) {
    pick(SolverChoice::oracle, "unique-winner instances fall back to the game tree");
    return r;
  }
  if (v.target == Target::pinpoint) {
    pick(SolverChoice::oracle, "pinpoint targets fall back to the game tree");
    return r;
  }
  if (v.direction == Direction::destructive) {
    if (rule.is_plurality()) {
      pick(SolverChoice::poly, "destructive plurality has a closed form");
    } else {
      pick(SolverChoice::oracle,
           "no specialized destructive solver for '" + rule.text() + "'");
    }
    return r;
  }
  // constructive, segment, nonunique, scoring family
  if (rule.is_plurality()) {
    pick(SolverChoice::poly, "constructive plurality has a closed form");
    return r;
  }
  if (rule.is_veto()) {
    if (v.weighting == Weighting::unweighted) {
      pick(SolverChoice::poly, "unweighted veto: final-score threshold scan");
    } else if (doc.candidates.size() == 3) {
      pick(SolverChoice::veto3, "weighted veto with three candidates: interval test");
    } else {
      pick(SolverChoice::veto_pnp,
           "weighted veto: dominant-strategy threshold comparison");
    }
    return r;
  }
  if (rule.kind == Rule::Kind::k_approval || rule.kind == Rule::Kind::k_veto) {
    if (v.weighting == Weighting::unweighted) {
      pick(SolverChoice::greedy, "unweighted " + rule.text() + ": greedy simulation");
    } else {
      pick(SolverChoice::oracle,
           "weighted '" + rule.text() + "' is outside the polynomial cases");
    }
    return r;
  }
  if (scoring_poly_applicable(rule.alpha)) {
    pick(SolverChoice::poly,
         "scoring vector is flat or plurality-shaped: dichotomy applies");
  } else {
    pick(SolverChoice::oracle,
         "scoring vector is outside the polynomial dichotomy");
  }
  return r;
}

}  // namespace

SolverChoice solver_from_name(std::string_view name) {
  if (name == "auto" || name == "automatic") return SolverChoice::automatic;
  if (name == "oracle") return SolverChoice::oracle;
  if (name == "poly") return SolverChoice::poly;
  if (name == "greedy") return SolverChoice::greedy;
  if (name == "veto-pnp" || name == "veto_pnp") return SolverChoice::veto_pnp;
  if (name == "veto3") return SolverChoice::veto3;
  fail(Err::WrongVariant, "unknown solver '" + std::string(name) + "'");
}

Decision decide_doc(const InstanceDoc& doc, SolverChoice choice,
                    const SearchLimits& limits) {
  if (doc.schedule_free) {
    ScheduleFreeState state = doc.to_state();
    if (choice == SolverChoice::automatic)
      return {decide_schedule_robust(state, doc.rule, doc.variant,
                                     ScheduleMethod::manipulators_first, limits),
              "sr-manipulators-first"};
    if (choice == SolverChoice::oracle)
      return {decide_schedule_robust(state, doc.rule, doc.variant,
                                     ScheduleMethod::exhaustive, limits),
              "sr-exhaustive"};
    fail(Err::WrongVariant,
         "schedule-free instances take only the automatic or oracle solvers");
  }
  Oms oms = doc.to_oms();
  SolverChoice eff =
      choice == SolverChoice::automatic ? plan_route(doc).choice : choice;
  switch (eff) {
    case SolverChoice::oracle:
      return {decide_online(oms, doc.rule, doc.variant, limits), "oracle"};
    case SolverChoice::poly: {
      if (doc.rule.is_plurality()) {
        bool yes = doc.variant.direction == Direction::constructive
                       ? decide_plurality_constructive_weighted(oms, doc.variant)
                       : decide_plurality_destructive_weighted(oms, doc.variant);
        return {yes, "poly"};
      }
      if (doc.rule.is_veto())
        return {decide_1veto_threshold(oms, doc.variant), "poly"};
      if (doc.rule.is_scoring_family()) {
        auto alpha =
            scoring_vector(doc.rule, static_cast<int>(doc.candidates.size()));
        auto yes = decide_scoring_weighted(alpha, oms, doc.variant);
        if (!yes)
          fail(Err::WrongVariant,
               "scoring vector is outside the polynomial dichotomy");
        return {*yes, "poly"};
      }
      fail(Err::WrongVariant,
           "no polynomial solver for rule '" + doc.rule.text() + "'");
    }
    case SolverChoice::greedy:
      return {decide_kapproval_kveto_unweighted(oms, doc.rule, doc.variant),
              "greedy"};
    case SolverChoice::veto_pnp:
      if (!doc.rule.is_veto())
        fail(Err::WrongVariant, "veto-pnp applies only to the veto rule");
      return {decide_veto_weighted(oms, doc.variant), "veto-pnp"};
    case SolverChoice::veto3:
      if (!doc.rule.is_veto())
        fail(Err::WrongVariant, "veto3 applies only to the veto rule");
      return {decide_veto3_weighted(oms, doc.variant), "veto3"};
    case SolverChoice::automatic: break;
  }
  fail(Err::WrongVariant, "unroutable instance");
}

std::string profile_doc(const InstanceDoc& doc, SolverChoice choice,
                        const SearchLimits& limits) {
  std::string bits;
  InstanceDoc work = doc;
  for (const auto& c : doc.candidates) {
    work.distinguished = c;
    bits += decide_doc(work, choice, limits).yes ? '1' : '0';
  }
  return bits;
}

std::string route_explanation(const InstanceDoc& doc) {
  std::string out;
  if (doc.schedule_free) {
    out += "schedule-free instance: conjoin remaining orders, most demanding first\n";
    out += "solver: sr-manipulators-first";
    return out;
  }
  Route r = plan_route(doc);
  for (const auto& line : r.reasons) out += line + "\n";
  out += std::string("solver: ") + solver_label(r.choice);
  return out;
}

}  // namespace seqvote
