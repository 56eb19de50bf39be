#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqvote/crosscheck.hpp"
#include "seqvote/dispatch.hpp"
#include "seqvote/instance_io.hpp"
#include "seqvote/reductions.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) seqvote::fail(seqvote::Err::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<seqvote::Big> parse_weight_list(const std::string& text) {
  std::vector<seqvote::Big> out;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    std::size_t i = (tok[0] == '-') ? 1 : 0;
    bool ok = i < tok.size();
    for (std::size_t j = i; j < tok.size(); ++j)
      if (tok[j] < '0' || tok[j] > '9') ok = false;
    if (!ok) seqvote::fail(seqvote::Err::Parse, "bad integer '" + tok + "'");
    out.emplace_back(tok);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::string piece = s.substr(start, i - start);
      std::size_t a = piece.find_first_not_of(" \t");
      std::size_t b = piece.find_last_not_of(" \t");
      if (a != std::string::npos) out.push_back(piece.substr(a, b - a + 1));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace seqvote;
  CLI::App app{"online coalitional manipulation of sequential elections"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decide", "decide one instance file");
  std::string dec_file, dec_solver = "auto";
  long long dec_budget = 10'000'000;
  bool dec_explain = false;
  dec->add_option("file", dec_file, "instance file")->required();
  dec->add_option("--solver", dec_solver,
                  "auto|oracle|poly|greedy|veto-pnp|veto3");
  dec->add_option("--budget", dec_budget, "game-tree node budget");
  dec->add_flag("--explain", dec_explain, "print the routing steps to stderr");

  auto* pro = app.add_subcommand(
      "profile", "verdict per distinguished candidate, declaration order");
  std::string pro_file, pro_solver = "auto";
  long long pro_budget = 10'000'000;
  pro->add_option("file", pro_file, "instance file without a d: section")
      ->required();
  pro->add_option("--solver", pro_solver,
                  "auto|oracle|poly|greedy|veto-pnp|veto3");
  pro->add_option("--budget", pro_budget, "game-tree node budget");

  auto* gen = app.add_subcommand(
      "gen", "generate a labeled instance from a source problem");
  std::string gen_kind, gen_src, gen_out, gen_flavor = "destructive";
  int gen_m = 2;
  gen->add_option("kind", gen_kind, "qbf|partition-plurality|partition-veto3|maxsatasg")
      ->required()
      ->check(CLI::IsMember(
          {"qbf", "partition-plurality", "partition-veto3", "maxsatasg"}));
  gen->add_option("source", gen_src,
                  "source file: QBF prefix text, an integer list, or a DIMACS "
                  "pair split by a '%' line")
      ->required();
  gen->add_option("-o,--out", gen_out, "output instance path")->required();
  gen->add_option("--m", gen_m, "candidate count (partition-plurality)");
  gen->add_option("--flavor", gen_flavor, "destructive|complement")
      ->check(CLI::IsMember({"destructive", "complement"}));

  auto* cc = app.add_subcommand(
      "crosscheck", "sweep fast solvers against the game-tree oracle");
  CrosscheckOptions opt;
  std::string cc_rules = "plurality";
  cc->add_option("--max-candidates", opt.max_candidates, "largest m sampled");
  cc->add_option("--max-voters", opt.max_voters, "largest voter count sampled");
  cc->add_option("--max-weight", opt.max_weight, "largest voter weight sampled");
  cc->add_option("--rules", cc_rules, "comma-separated rule tokens");
  cc->add_option("--seed", opt.seed, "rng seed");
  cc->add_option("--samples", opt.samples, "instances per rule");
  cc->add_flag("--mutant", opt.mutant,
               "corrupt one verdict; the sweep must catch it");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dec) {
      InstanceDoc doc = parse_instance(slurp(dec_file));
      if (dec_explain) std::cerr << route_explanation(doc) << "\n";
      Decision d =
          decide_doc(doc, solver_from_name(dec_solver), SearchLimits{dec_budget});
      std::cout << (d.yes ? "YES" : "NO") << "\n"
                << "solver: " << d.solver << "\n";
      return 0;
    }
    if (*pro) {
      InstanceDoc doc = parse_instance(slurp(pro_file));
      if (!doc.distinguished.empty())
        fail(Err::WrongVariant, "profile input must omit the d: section");
      std::cout << profile_doc(doc, solver_from_name(pro_solver),
                               SearchLimits{pro_budget})
                << "\n";
      return 0;
    }
    if (*gen) {
      std::string src = slurp(gen_src);
      GenResult g;
      bool label = false;
      if (gen_kind == "qbf") {
        Qbf q = parse_qbf(src);
        g = gen_qbf_oms(q);
        label = qbf_eval(q);
      } else if (gen_kind == "partition-plurality") {
        auto ws = parse_weight_list(src);
        auto flavor = gen_flavor == "destructive"
                          ? PartitionFlavor::destructive
                          : PartitionFlavor::constructive_complement;
        g = gen_partition_plurality_uw(ws, gen_m, flavor);
        bool part = partition_brute(ws);
        label = flavor == PartitionFlavor::destructive ? part : !part;
      } else if (gen_kind == "partition-veto3") {
        auto ws = parse_weight_list(src);
        g = gen_partition_veto3(ws);
        label = !partition_brute(ws);
      } else {
        auto [phi, psi] = parse_dimacs_pair(src);
        g = gen_maxsatasg_veto_oms(phi, psi);
        label = maxsatasg_equal(phi, psi);
      }
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) fail(Err::Parse, "cannot write '" + gen_out + "'");
      out << serialize_instance(doc_from(g, label));
      return 0;
    }
    if (*cc) {
      opt.rules = split_commas(cc_rules);
      CrosscheckResult res = run_crosscheck(opt);
      std::cout << res.summary << "\n";
      if (!res.ok) {
        std::cout << res.counterexample;
        return 1;
      }
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
