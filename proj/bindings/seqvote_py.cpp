#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "seqvote/crosscheck.hpp"
#include "seqvote/dispatch.hpp"
#include "seqvote/instance_io.hpp"
#include "seqvote/reductions.hpp"
#include "seqvote/veto.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// seqvote::Big <-> python int, through decimal strings.
template <>
struct type_caster<seqvote::Big> {
 public:
  PYBIND11_TYPE_CASTER(seqvote::Big, const_name("int"));
  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = seqvote::Big(std::string(py::str(src)));
    return true;
  }
  static handle cast(const seqvote::Big& v, return_value_policy, handle) {
    return PyLong_FromString(seqvote::to_string(v).c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace seqvote;

Direction direction_of(const std::string& s) {
  if (s == "constructive") return Direction::constructive;
  if (s == "destructive") return Direction::destructive;
  fail(Err::WrongVariant, "unknown direction '" + s + "'");
}

Target target_of(const std::string& s) {
  if (s == "segment") return Target::segment;
  if (s == "pinpoint") return Target::pinpoint;
  fail(Err::WrongVariant, "unknown target '" + s + "'");
}

py::tuple gen_tuple(const GenResult& g, bool label) {
  return py::make_tuple(serialize_instance(doc_from(g, label)), label);
}

}  // namespace

PYBIND11_MODULE(seqvote, m) {
  m.doc() =
      "Decision engine for online coalitional manipulation of sequential "
      "elections: exact game-tree oracle, polynomial solvers, and hardness "
      "instance generators.";

  auto err = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", err);
  py::register_exception<BudgetError>(m, "BudgetError", err);

  m.def(
      "decide",
      [](const std::string& text, const std::string& solver, long long budget) {
        InstanceDoc doc = parse_instance(text);
        Decision d =
            decide_doc(doc, solver_from_name(solver), SearchLimits{budget});
        return py::make_tuple(d.yes, d.solver);
      },
      py::arg("text"), py::arg("solver") = "auto",
      py::arg("budget") = 10'000'000LL,
      "Decide one instance file; returns (yes, solver).");

  m.def(
      "profile",
      [](const std::string& text, const std::string& solver, long long budget) {
        InstanceDoc doc = parse_instance(text);
        return profile_doc(doc, solver_from_name(solver), SearchLimits{budget});
      },
      py::arg("text"), py::arg("solver") = "auto",
      py::arg("budget") = 10'000'000LL,
      "Verdict bit per candidate, declaration order.");

  m.def(
      "explain",
      [](const std::string& text) {
        return route_explanation(parse_instance(text));
      },
      py::arg("text"), "The automatic routing steps for this instance.");

  m.def(
      "canonicalize",
      [](const std::string& text) {
        return serialize_instance(parse_instance(text));
      },
      py::arg("text"), "Parse and re-serialize in canonical form.");

  m.def(
      "goal_set",
      [](const std::vector<std::string>& sigma, const std::string& d,
         const std::string& direction, const std::string& target) {
        return goal_set(Ballot{sigma}, d, direction_of(direction),
                        target_of(target));
      },
      py::arg("sigma"), py::arg("d"), py::arg("direction") = "constructive",
      py::arg("target") = "segment");

  m.def(
      "winners",
      [](const std::vector<std::string>& rule_tokens,
         const std::vector<std::string>& candidates,
         const std::vector<
             std::tuple<std::string, Big, std::vector<std::string>>>& votes) {
        Rule rule = parse_rule_tokens(rule_tokens);
        std::vector<PastVote> pv;
        for (const auto& [name, w, order] : votes)
          pv.push_back(
              PastVote{Voter{name, w, Role::nonmanipulator}, Ballot{order}});
        return winners(rule, candidates, pv);
      },
      py::arg("rule_tokens"), py::arg("candidates"), py::arg("votes"),
      "Winner set; votes are (name, weight, ranking) triples.");

  m.def(
      "gen_qbf",
      [](const std::string& src) {
        Qbf q = parse_qbf(src);
        return gen_tuple(gen_qbf_oms(q), qbf_eval(q));
      },
      py::arg("qbf"), "Instance text plus ground-truth label for a QBF.");

  m.def(
      "gen_partition_plurality",
      [](const std::vector<Big>& weights, int m, const std::string& flavor) {
        PartitionFlavor f;
        if (flavor == "destructive") f = PartitionFlavor::destructive;
        else if (flavor == "complement") f = PartitionFlavor::constructive_complement;
        else fail(Err::WrongVariant, "unknown flavor '" + flavor + "'");
        bool part = partition_brute(weights);
        return gen_tuple(gen_partition_plurality_uw(weights, m, f),
                         f == PartitionFlavor::destructive ? part : !part);
      },
      py::arg("weights"), py::arg("m") = 2, py::arg("flavor") = "destructive");

  m.def(
      "gen_partition_veto3",
      [](const std::vector<Big>& weights) {
        return gen_tuple(gen_partition_veto3(weights), !partition_brute(weights));
      },
      py::arg("weights"));

  m.def(
      "gen_maxsatasg",
      [](const std::string& dimacs_pair) {
        auto [phi, psi] = parse_dimacs_pair(dimacs_pair);
        return gen_tuple(gen_maxsatasg_veto_oms(phi, psi),
                         maxsatasg_equal(phi, psi));
      },
      py::arg("dimacs_pair"),
      "Instance text plus label for a formula pair split by a '%' line.");

  m.def(
      "qbf_eval",
      [](const std::string& src) { return qbf_eval(parse_qbf(src)); },
      py::arg("qbf"));

  m.def(
      "partition_feasible",
      [](const std::vector<Big>& weights, const std::vector<Big>& demands) {
        return partition_feasible(weights, demands);
      },
      py::arg("weights"), py::arg("demands"));

  m.def(
      "min_threshold",
      [](const std::vector<Big>& weights, const std::vector<Big>& maxscores) {
        return min_threshold(weights, maxscores);
      },
      py::arg("weights"), py::arg("maxscores"));

  m.def(
      "subset_sum_items",
      [](const std::string& dimacs) {
        SubsetSum s = wagner_subset_sum(parse_dimacs(dimacs));
        return py::make_tuple(s.items, s.target_base);
      },
      py::arg("dimacs"),
      "The subset-sum encoding of a 3cnf: (items, base target).");

  m.def(
      "maxsatasg",
      [](const std::string& dimacs) {
        return maxsatasg_brute(parse_dimacs(dimacs));
      },
      py::arg("dimacs"),
      "Lexicographically greatest satisfying assignment, or None.");

  m.def(
      "maxsatasg_equal",
      [](const std::string& dimacs_pair) {
        auto [phi, psi] = parse_dimacs_pair(dimacs_pair);
        return maxsatasg_equal(phi, psi);
      },
      py::arg("dimacs_pair"));

  m.def(
      "crosscheck",
      [](int max_candidates, int max_voters, long long max_weight,
         const std::vector<std::string>& rules, unsigned long long seed,
         long long samples, bool mutant) {
        CrosscheckOptions o;
        o.max_candidates = max_candidates;
        o.max_voters = max_voters;
        o.max_weight = max_weight;
        o.rules = rules;
        o.seed = seed;
        o.samples = samples;
        o.mutant = mutant;
        CrosscheckResult r = run_crosscheck(o);
        return py::make_tuple(r.ok, r.checked, r.summary, r.counterexample);
      },
      py::arg("max_candidates") = 3, py::arg("max_voters") = 3,
      py::arg("max_weight") = 2,
      py::arg("rules") = std::vector<std::string>{"plurality"},
      py::arg("seed") = 1, py::arg("samples") = 1000,
      py::arg("mutant") = false,
      "Sweep fast solvers against the oracle; returns (ok, checked, summary, "
      "counterexample).");
}
