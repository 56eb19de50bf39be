#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqvote {

// Boolean formulas over doubly indexed variables x_{i,j}: i names a block,
// j a position within it. Used both as candidate names for the tiered rule
// and as quantified-formula matrices.
struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  enum class Kind { var, neg, conj, disj };
  Kind kind = Kind::var;
  int block = 0;   // var only
  int index = 0;   // var only
  Formula a, b;    // neg uses a; conj/disj use both
};

Formula f_var(int block, int index);
Formula f_neg(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);

bool f_eval(const Formula& f, const std::function<bool(int, int)>& value);

// All variable occurrences, in syntactic order (with repeats).
void f_vars(const Formula& f, std::vector<std::pair<int, int>>& out);
int f_blocks(const Formula& f);  // max first subscript
int f_width(const Formula& f);   // max second subscript

// Canonical rendering in the candidate-name grammar:
//   formula := conj ('|' conj)* ; conj := unary ('&' unary)*
//   unary := '~' unary | var | '(' formula ')' ; var := 'x_{' nat ',' nat '}'
// No whitespace, '|' loosest, '~' tightest, nat has no leading zeros.
std::string f_name(const Formula& f);

// Strict parse of that grammar. Anything else (leftovers, whitespace, zero
// or out-of-range indices) yields nullopt: such a name is not a formula.
std::optional<Formula> parse_formula(std::string_view name);

// Conjunctive normal form over singly indexed variables x_1..x_vars.
// A literal is +v or -v (v >= 1).
struct Cnf {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

// assign[v-1] is the value of x_v.
bool cnf_eval(const Cnf& f, const std::vector<bool>& assign);
bool cnf_clause_ok(const std::vector<int>& clause, const std::vector<bool>& assign);
// Exactly three literals per clause, every variable within 1..vars.
bool is_three_cnf(const Cnf& f);
void check_three_cnf(const Cnf& f);  // throws NotThreeCnf

}  // namespace seqvote
