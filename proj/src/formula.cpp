#include "seqvote/formula.hpp"

#include <algorithm>
#include <set>

#include "seqvote/errors.hpp"

namespace seqvote {

Formula f_var(int block, int index) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaNode::Kind::var;
  n->block = block;
  n->index = index;
  return n;
}

static Formula unary(FormulaNode::Kind k, Formula a) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->a = std::move(a);
  return n;
}

static Formula binary(FormulaNode::Kind k, Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_neg(Formula a) { return unary(FormulaNode::Kind::neg, std::move(a)); }
Formula f_and(Formula a, Formula b) {
  return binary(FormulaNode::Kind::conj, std::move(a), std::move(b));
}
Formula f_or(Formula a, Formula b) {
  return binary(FormulaNode::Kind::disj, std::move(a), std::move(b));
}

bool f_eval(const Formula& f, const std::function<bool(int, int)>& value) {
  switch (f->kind) {
    case FormulaNode::Kind::var: return value(f->block, f->index);
    case FormulaNode::Kind::neg: return !f_eval(f->a, value);
    case FormulaNode::Kind::conj: return f_eval(f->a, value) && f_eval(f->b, value);
    case FormulaNode::Kind::disj: return f_eval(f->a, value) || f_eval(f->b, value);
  }
  return false;
}

void f_vars(const Formula& f, std::vector<std::pair<int, int>>& out) {
  switch (f->kind) {
    case FormulaNode::Kind::var:
      out.emplace_back(f->block, f->index);
      return;
    case FormulaNode::Kind::neg:
      f_vars(f->a, out);
      return;
    default:
      f_vars(f->a, out);
      f_vars(f->b, out);
      return;
  }
}

int f_blocks(const Formula& f) {
  std::vector<std::pair<int, int>> vs;
  f_vars(f, vs);
  int mx = 0;
  for (auto& [i, j] : vs) mx = std::max(mx, i);
  return mx;
}

int f_width(const Formula& f) {
  std::vector<std::pair<int, int>> vs;
  f_vars(f, vs);
  int mx = 0;
  for (auto& [i, j] : vs) mx = std::max(mx, j);
  return mx;
}

// precedence: disj 0, conj 1, neg/var 2
static int prec_of(const Formula& f) {
  switch (f->kind) {
    case FormulaNode::Kind::disj: return 0;
    case FormulaNode::Kind::conj: return 1;
    default: return 2;
  }
}

static void emit(const Formula& f, std::string& out, int parent_prec) {
  int prec = prec_of(f);
  bool paren = prec < parent_prec;
  if (paren) out += '(';
  switch (f->kind) {
    case FormulaNode::Kind::var:
      out += "x_{";
      out += std::to_string(f->block);
      out += ',';
      out += std::to_string(f->index);
      out += '}';
      break;
    case FormulaNode::Kind::neg:
      out += '~';
      emit(f->a, out, 2);
      break;
    case FormulaNode::Kind::conj:
      emit(f->a, out, 1);
      out += '&';
      emit(f->b, out, 1);
      break;
    case FormulaNode::Kind::disj:
      emit(f->a, out, 0);
      out += '|';
      emit(f->b, out, 0);
      break;
  }
  if (paren) out += ')';
}

std::string f_name(const Formula& f) {
  std::string out;
  emit(f, out, 0);
  return out;
}

namespace {

// Strict recursive descent over the exact name grammar. No whitespace.
struct NameParser {
  std::string_view s;
  size_t i = 0;

  bool eof() const { return i >= s.size(); }
  bool eat(char c) {
    if (!eof() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  std::optional<int> nat() {
    if (eof() || s[i] < '1' || s[i] > '9') return std::nullopt;
    long long v = 0;
    while (!eof() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000'000) return std::nullopt;
      ++i;
    }
    return static_cast<int>(v);
  }

  std::optional<Formula> var() {
    if (!eat('x') || !eat('_') || !eat('{')) return std::nullopt;
    auto b = nat();
    if (!b || !eat(',')) return std::nullopt;
    auto j = nat();
    if (!j || !eat('}')) return std::nullopt;
    return f_var(*b, *j);
  }

  std::optional<Formula> unary() {
    if (eat('~')) {
      auto a = unary();
      if (!a) return std::nullopt;
      return f_neg(*a);
    }
    if (eat('(')) {
      auto a = disj();
      if (!a || !eat(')')) return std::nullopt;
      return a;
    }
    return var();
  }

  std::optional<Formula> conj() {
    auto a = unary();
    if (!a) return std::nullopt;
    while (eat('&')) {
      auto b = unary();
      if (!b) return std::nullopt;
      a = f_and(*a, *b);
    }
    return a;
  }

  std::optional<Formula> disj() {
    auto a = conj();
    if (!a) return std::nullopt;
    while (eat('|')) {
      auto b = conj();
      if (!b) return std::nullopt;
      a = f_or(*a, *b);
    }
    return a;
  }
};

}  // namespace

std::optional<Formula> parse_formula(std::string_view name) {
  NameParser p{name};
  auto f = p.disj();
  if (!f || !p.eof()) return std::nullopt;
  return f;
}

bool cnf_clause_ok(const std::vector<int>& clause,
                   const std::vector<bool>& assign) {
  for (int lit : clause) {
    int v = lit > 0 ? lit : -lit;
    bool val = assign[static_cast<size_t>(v - 1)];
    if (lit > 0 ? val : !val) return true;
  }
  return false;
}

bool cnf_eval(const Cnf& f, const std::vector<bool>& assign) {
  for (auto& cl : f.clauses)
    if (!cnf_clause_ok(cl, assign)) return false;
  return true;
}

bool is_three_cnf(const Cnf& f) {
  if (f.vars < 1) return false;
  for (auto& cl : f.clauses) {
    if (cl.size() != 3) return false;
    for (int lit : cl) {
      int v = lit > 0 ? lit : -lit;
      if (lit == 0 || v > f.vars) return false;
    }
  }
  return true;
}

void check_three_cnf(const Cnf& f) {
  if (!is_three_cnf(f))
    fail(Err::NotThreeCnf,
         "expected exactly three literals per clause over x_1..x_" +
             std::to_string(f.vars));
}

}  // namespace seqvote
