#include "seqvote/reductions.hpp"

#include "seqvote/veto.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace seqvote {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

struct Scan {
  std::string_view s;
  size_t p = 0;

  void ws() {
    while (p < s.size() && is_space(s[p])) ++p;
  }
  bool eof() const { return p >= s.size(); }
  char peek() const { return s[p]; }

  [[noreturn]] void die(size_t at, const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < s.size(); ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) die(p, std::string("expected '") + c + "' " + what);
    ++p;
  }

  int nat(const char* what) {
    size_t start = p;
    if (eof() || !is_digit(peek())) die(p, std::string("expected ") + what);
    long long v = 0;
    while (p < s.size() && is_digit(s[p])) {
      v = v * 10 + (s[p] - '0');
      if (v > 1000000000) die(start, "index out of range");
      ++p;
    }
    if (s[start] == '0') die(start, "indices start at 1 and have no leading zeros");
    return static_cast<int>(v);
  }

  // At 'x'. Accepts x_{i,j}, x<i>,<j> and the two-digit shorthand xij.
  std::pair<int, int> var() {
    size_t start = p;
    ++p;
    if (!eof() && peek() == '_') {
      ++p;
      expect('{', "in variable");
      int i = nat("a block number");
      expect(',', "in variable");
      int j = nat("a position number");
      expect('}', "in variable");
      return {i, j};
    }
    size_t ds = p;
    while (p < s.size() && is_digit(s[p])) ++p;
    size_t digits = p - ds;
    if (digits == 0) die(start, "expected variable indices after 'x'");
    if (p < s.size() && s[p] == ',') {
      p = ds;
      int i = nat("a block number");
      ++p;  // ','
      int j = nat("a position number");
      return {i, j};
    }
    if (digits == 2 && s[ds] != '0' && s[ds + 1] != '0')
      return {s[ds] - '0', s[ds + 1] - '0'};
    die(start, "ambiguous variable; write x_{i,j}");
  }
};

Formula matrix_disj(Scan& sc);

Formula matrix_unary(Scan& sc) {
  sc.ws();
  if (sc.eof()) sc.die(sc.p, "unexpected end of matrix");
  char c = sc.peek();
  if (c == '~') {
    ++sc.p;
    return f_neg(matrix_unary(sc));
  }
  if (c == '(') {
    ++sc.p;
    Formula a = matrix_disj(sc);
    sc.ws();
    sc.expect(')', "to close the group");
    return a;
  }
  if (c == 'x') {
    auto [i, j] = sc.var();
    return f_var(i, j);
  }
  sc.die(sc.p, "expected a variable, '~' or '('");
}

Formula matrix_conj(Scan& sc) {
  Formula a = matrix_unary(sc);
  for (;;) {
    sc.ws();
    if (sc.eof() || sc.peek() != '&') return a;
    ++sc.p;
    a = f_and(a, matrix_unary(sc));
  }
}

Formula matrix_disj(Scan& sc) {
  Formula a = matrix_conj(sc);
  for (;;) {
    sc.ws();
    if (sc.eof() || sc.peek() != '|') return a;
    ++sc.p;
    a = f_or(a, matrix_conj(sc));
  }
}

}  // namespace

Qbf parse_qbf(std::string_view src) {
  Scan sc{src, 0};
  Qbf q;
  int block = 0;
  for (;;) {
    sc.ws();
    if (sc.eof()) sc.die(sc.p, "expected ':' before the matrix");
    char c = sc.peek();
    if (c == ':') {
      ++sc.p;
      break;
    }
    if (c == 'E' || c == 'A') {
      if (sc.p + 1 < sc.s.size() && !is_space(sc.s[sc.p + 1]))
        sc.die(sc.p, "unknown token in quantifier prefix");
      ++block;
      bool want_exists = (block % 2 == 1);
      if ((c == 'E') != want_exists)
        fail(Err::MalformedQbf, "quantifiers must alternate starting with E");
      q.widths.push_back(0);
      ++sc.p;
      continue;
    }
    if (c == 'x') {
      if (block == 0)
        fail(Err::MalformedQbf, "variable before any quantifier");
      auto [i, j] = sc.var();
      if (i != block || j != q.widths[static_cast<size_t>(block - 1)] + 1)
        fail(Err::MalformedQbf,
             "block " + std::to_string(block) +
                 " must bind its variables as x_{i,1}, x_{i,2}, ... in order");
      ++q.widths[static_cast<size_t>(block - 1)];
      continue;
    }
    sc.die(sc.p, "unexpected character in quantifier prefix");
  }
  if (block == 0) fail(Err::MalformedQbf, "no quantifier blocks");
  q.matrix = matrix_disj(sc);
  sc.ws();
  if (!sc.eof()) sc.die(sc.p, "trailing input after the matrix");
  validate_qbf(q);
  return q;
}

std::string qbf_text(const Qbf& q) {
  validate_qbf(q);
  std::string out;
  for (size_t b = 0; b < q.widths.size(); ++b) {
    out += (b % 2 == 0) ? 'E' : 'A';
    for (int j = 1; j <= q.widths[b]; ++j)
      out += " x_{" + std::to_string(b + 1) + "," + std::to_string(j) + "}";
    out += ' ';
  }
  out += ": ";
  out += f_name(q.matrix);
  return out;
}

void validate_qbf(const Qbf& q) {
  if (q.widths.empty()) fail(Err::MalformedQbf, "no quantifier blocks");
  for (int w : q.widths)
    if (w < 1) fail(Err::MalformedQbf, "empty quantifier block");
  if (!q.matrix) fail(Err::MalformedQbf, "missing matrix");
  int blocks = static_cast<int>(q.widths.size());
  std::vector<std::pair<int, int>> occ;
  f_vars(q.matrix, occ);
  std::vector<char> touched(static_cast<size_t>(blocks) + 1, 0);
  for (auto [i, j] : occ) {
    if (i < 1 || i > blocks || j < 1 || j > q.widths[static_cast<size_t>(i - 1)])
      fail(Err::MalformedQbf, "matrix uses an unbound variable");
    touched[static_cast<size_t>(i)] = 1;
  }
  for (int i = 1; i <= blocks; ++i)
    if (!touched[static_cast<size_t>(i)])
      fail(Err::MalformedQbf,
           "matrix never uses block " + std::to_string(i));
}

bool qbf_eval(const Qbf& q) {
  validate_qbf(q);
  long long total = 0;
  for (int w : q.widths) total += w;
  if (total > 20) fail(Err::TooLarge, "too many variables to evaluate");
  int blocks = static_cast<int>(q.widths.size());
  std::vector<std::vector<bool>> asg(static_cast<size_t>(blocks));
  for (int b = 0; b < blocks; ++b)
    asg[static_cast<size_t>(b)].assign(static_cast<size_t>(q.widths[static_cast<size_t>(b)]), false);

  auto value = [&](int i, int j) {
    return static_cast<bool>(asg[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
  };
  std::function<bool(int)> eval = [&](int b) -> bool {
    if (b > blocks) return f_eval(q.matrix, value);
    bool exists = (b % 2 == 1);
    int w = q.widths[static_cast<size_t>(b - 1)];
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
      for (int j = 0; j < w; ++j)
        asg[static_cast<size_t>(b - 1)][static_cast<size_t>(j)] =
            ((mask >> j) & 1u) != 0;
      if (eval(b + 1) == exists) return exists;
    }
    return !exists;
  };
  return eval(1);
}

GenResult gen_qbf_oms(const Qbf& q) {
  validate_qbf(q);
  int blocks = static_cast<int>(q.widths.size());
  int maxk = *std::max_element(q.widths.begin(), q.widths.end());

  GenResult out;
  std::string c = f_name(q.matrix);
  out.oms.candidates.push_back(c);
  std::string dummy = c;
  for (int j = 0; j < 2 * maxk; ++j) {
    dummy += '!';
    out.oms.candidates.push_back(dummy);
  }
  out.oms.sigma.order = out.oms.candidates;  // ascending names, c on top
  out.oms.distinguished = c;

  size_t pad = std::to_string(blocks).size();
  auto voter = [&](int i) {
    std::string nm = std::to_string(i);
    nm.insert(0, pad - nm.size(), '0');
    Role role = (i % 2 == 1) ? Role::manipulator : Role::nonmanipulator;
    return Voter{nm, 1, role};
  };
  out.oms.snapshot.current = voter(1);
  for (int i = 2; i <= blocks; ++i)
    out.oms.snapshot.future.push_back(voter(i));

  out.rule = Rule::tiered();
  out.variant.direction = Direction::constructive;
  out.variant.target = Target::segment;
  out.variant.weighting = Weighting::unweighted;
  out.variant.winner_model = WinnerModel::nonunique;
  return out;
}

namespace {

// Shared validation for the Partition embeddings: positive entries, even sum.
Big partition_total(const std::vector<Big>& weights) {
  if (weights.empty()) fail(Err::BadPartitionInput, "empty weight sequence");
  Big total = 0;
  for (auto& w : weights) {
    if (w <= 0) fail(Err::BadPartitionInput, "weights must be positive");
    total += w;
  }
  if (total % 2 != 0) fail(Err::OddSum, "weights must sum to an even number");
  return total;
}

Ballot top_ballot(const std::vector<std::string>& candidates,
                  const std::string& top) {
  Ballot b;
  b.order.push_back(top);
  for (auto& c : candidates)
    if (c != top) b.order.push_back(c);
  return b;
}

Ballot veto_ballot(const std::vector<std::string>& candidates,
                   const std::string& last) {
  Ballot b;
  for (auto& c : candidates)
    if (c != last) b.order.push_back(c);
  b.order.push_back(last);
  return b;
}

}  // namespace

bool partition_brute(const std::vector<Big>& weights) {
  for (auto& w : weights)
    if (w < 0) fail(Err::BadPartitionInput, "negative weight");
  if (weights.size() > 24) fail(Err::TooLarge, "too many weights to enumerate");
  Big total = 0;
  for (auto& w : weights) total += w;
  if (total % 2 != 0) fail(Err::OddSum, "weights must sum to an even number");
  WeightSet ws(weights);
  Big half = total / 2;
  return ws.any_sum_in(half, half);
}

GenResult gen_partition_plurality_uw(const std::vector<Big>& weights, int m,
                                     PartitionFlavor flavor) {
  if (m < 2) fail(Err::TooFewCandidates, "the embedding needs at least 2 candidates");
  Big total = partition_total(weights);
  Big w_half = total / 2;
  size_t z = weights.size();
  Big scale = m - 1;

  GenResult out;
  for (int i = 1; i <= m; ++i)
    out.oms.candidates.push_back("c" + std::to_string(i));
  out.oms.sigma.order = out.oms.candidates;

  // m-2 voters already lock in pairwise-distinct scores modulo m-1, leaving
  // only the last two candidates able to tie
  for (int i = 1; i <= m - 2; ++i) {
    PastVote pv;
    pv.voter = Voter{"v" + std::to_string(i), scale * w_half - i,
                     Role::nonmanipulator};
    pv.ballot = top_ballot(out.oms.candidates, out.oms.candidates[static_cast<size_t>(i - 1)]);
    out.oms.snapshot.past.push_back(pv);
  }

  out.variant.target = Target::segment;
  out.variant.weighting = Weighting::weighted;
  out.variant.winner_model = WinnerModel::unique;

  if (flavor == PartitionFlavor::destructive) {
    out.oms.distinguished = out.oms.candidates.front();
    out.variant.direction = Direction::destructive;
    out.oms.snapshot.current = Voter{"u1", scale * weights[0], Role::manipulator};
    for (size_t i = 1; i < z; ++i)
      out.oms.snapshot.future.push_back(
          Voter{"u" + std::to_string(i + 1), scale * weights[i], Role::manipulator});
  } else {
    out.oms.distinguished = out.oms.candidates.back();
    out.variant.direction = Direction::constructive;
    out.oms.snapshot.current = Voter{"u0", 0, Role::manipulator};
    for (size_t i = 0; i < z; ++i)
      out.oms.snapshot.future.push_back(
          Voter{"u" + std::to_string(i + 1), scale * weights[i], Role::nonmanipulator});
  }
  out.rule = Rule::plurality();
  return out;
}

GenResult gen_partition_veto3(const std::vector<Big>& weights) {
  Big total = partition_total(weights);
  Big w_half = total / 2;

  GenResult out;
  out.oms.candidates = {"a", "b", "c"};
  out.oms.sigma.order = out.oms.candidates;
  out.oms.distinguished = "b";

  PastVote pv;
  pv.voter = Voter{"v1", w_half - 1, Role::nonmanipulator};
  pv.ballot = veto_ballot(out.oms.candidates, "c");
  out.oms.snapshot.past.push_back(pv);

  out.oms.snapshot.current = Voter{"u", 0, Role::manipulator};
  for (size_t i = 0; i < weights.size(); ++i)
    out.oms.snapshot.future.push_back(
        Voter{"u" + std::to_string(i + 1), weights[i], Role::nonmanipulator});

  out.rule = Rule::veto();
  out.variant.direction = Direction::constructive;
  out.variant.target = Target::segment;
  out.variant.weighting = Weighting::weighted;
  out.variant.winner_model = WinnerModel::nonunique;
  return out;
}

SubsetSum wagner_subset_sum(const Cnf& f) {
  check_three_cnf(f);
  int n = f.vars;
  int m = static_cast<int>(f.clauses.size());

  // one base-6 digit per clause (weight 3) and per variable (weight 1), the
  // assignment itself in binary below them; digit sums stay under 6, so
  // subset sums add without carries
  std::vector<Big> p6(static_cast<size_t>(2 * n + m) + 1);
  p6[0] = 1;
  for (size_t i = 1; i < p6.size(); ++i) p6[i] = 6 * p6[i - 1];
  auto clause_digit = [&](int j) -> const Big& {  // j is 1-based
    return p6[static_cast<size_t>(2 * n + m - j)];
  };
  auto indicator_digit = [&](int i) -> const Big& {
    return p6[static_cast<size_t>(2 * n - i)];
  };

  SubsetSum out;
  for (int i = 1; i <= n; ++i) {
    Big t = indicator_digit(i) + (Big(1) << (n - i));
    Big fa = indicator_digit(i);
    for (int j = 1; j <= m; ++j)
      for (int lit : f.clauses[static_cast<size_t>(j - 1)]) {
        if (lit == i) t += clause_digit(j);
        if (lit == -i) fa += clause_digit(j);
      }
    out.items.push_back(t);
    out.items.push_back(fa);
  }
  for (int j = 1; j <= m; ++j) {
    out.items.push_back(clause_digit(j));
    out.items.push_back(clause_digit(j));
  }

  out.target_base = 0;
  for (int j = 1; j <= m; ++j) out.target_base += 3 * clause_digit(j);
  for (int i = 1; i <= n; ++i) out.target_base += indicator_digit(i);
  return out;
}

std::optional<std::vector<bool>> maxsatasg_brute(const Cnf& f) {
  if (f.vars > 22) fail(Err::TooLarge, "too many variables to enumerate");
  int n = f.vars;
  std::vector<bool> assign(static_cast<size_t>(n));
  for (long long a = (1ll << n) - 1; a >= 0; --a) {
    for (int i = 1; i <= n; ++i)
      assign[static_cast<size_t>(i - 1)] = ((a >> (n - i)) & 1) != 0;
    if (cnf_eval(f, assign)) return assign;
  }
  return std::nullopt;
}

HatPair build_hat_formulas(const Cnf& phi, const Cnf& psi) {
  check_three_cnf(phi);
  check_three_cnf(psi);
  for (auto* f : {&phi, &psi})
    for (auto& cl : f->clauses)
      for (int lit : cl)
        if (lit == 1 || lit == -1)
          fail(Err::VariableX1Used, "x_1 must not occur in either formula");
  int n = std::max({phi.vars, psi.vars, 1});

  // cnf(phi OR psi OR ~x_1): pairwise clause unions, each with ~x_1 added
  std::vector<std::vector<int>> products;
  std::set<std::vector<int>> seen;
  for (auto& ci : phi.clauses)
    for (auto& dj : psi.clauses) {
      std::set<int> lits(ci.begin(), ci.end());
      lits.insert(dj.begin(), dj.end());
      lits.insert(-1);
      std::vector<int> cl(lits.begin(), lits.end());
      if (seen.insert(cl).second) products.push_back(std::move(cl));
    }

  // chop to three literals per clause, chaining through fresh variables
  int fresh = n;
  std::vector<std::vector<int>> chained;
  for (auto& cl : products) {
    if (cl.size() <= 3) {
      std::vector<int> padded = cl;
      while (padded.size() < 3) padded.push_back(padded.back());
      chained.push_back(std::move(padded));
      continue;
    }
    size_t s = cl.size();
    chained.push_back({cl[0], cl[1], fresh + 1});
    for (size_t i = 2; i + 2 < s; ++i) {
      ++fresh;
      chained.push_back({-fresh, cl[i], fresh + 1});
    }
    ++fresh;
    chained.push_back({-fresh, cl[s - 2], cl[s - 1]});
  }
  if (fresh == n) {  // force a horizon strictly beyond the inputs' variables
    ++fresh;
    chained.push_back({fresh, fresh, -fresh});
  }
  int n_hat = fresh;

  HatPair hp;
  hp.n_hat = n_hat;
  hp.psi_hat = Cnf{n_hat, std::move(chained)};
  hp.phi_hat.vars = n_hat;
  hp.phi_hat.clauses = phi.clauses;
  hp.phi_hat.clauses.insert(hp.phi_hat.clauses.end(), psi.clauses.begin(),
                            psi.clauses.end());
  hp.phi_hat.clauses.push_back({1, 1, 1});
  hp.phi_hat.clauses.push_back({n_hat, n_hat, -n_hat});
  return hp;
}

bool maxsatasg_equal(const Cnf& phi, const Cnf& psi) {
  check_three_cnf(phi);
  check_three_cnf(psi);
  int n = std::max(phi.vars, psi.vars);
  auto a = maxsatasg_brute(Cnf{n, phi.clauses});
  if (!a) return false;
  auto b = maxsatasg_brute(Cnf{n, psi.clauses});
  return b && *a == *b;
}

GenResult gen_maxsatasg_veto_oms(const Cnf& phi, const Cnf& psi) {
  HatPair hp = build_hat_formulas(phi, psi);
  SubsetSum sp = wagner_subset_sum(hp.phi_hat);
  SubsetSum sq = wagner_subset_sum(hp.psi_hat);
  const Big &l1 = sp.target_base, &l2 = sq.target_base;
  Big em = ((Big(1) << hp.n_hat) - 1) * 2;
  Big sum_k = 0, sum_kp = 0;
  for (auto& k : sp.items) sum_k += k;
  for (auto& k : sq.items) sum_kp += k;

  Big wa = l1;
  Big wb = l1 + 2 * l2 + em - sum_kp;
  Big wc = l2;
  Big wd = l2 + 2 * l1 + em - sum_k;
  if (wb < 0 || wd < 0)
    fail(Err::NegativeDerivedWeight, "derived past-voter weight is negative");

  GenResult out;
  out.oms.candidates = {"a", "b", "c", "d'"};
  out.oms.sigma.order = out.oms.candidates;
  out.oms.distinguished = "b";

  auto past = [&](const char* name, const Big& w, const std::string& vetoed) {
    PastVote pv;
    pv.voter = Voter{name, w, Role::nonmanipulator};
    pv.ballot = veto_ballot(out.oms.candidates, vetoed);
    out.oms.snapshot.past.push_back(pv);
  };
  past("va", wa, "a");
  past("vb", wb, "b");
  past("vc", wc, "c");
  past("vd", wd, "d'");

  out.oms.snapshot.current = Voter{"u1", sp.items[0], Role::manipulator};
  for (size_t i = 1; i < sp.items.size(); ++i)
    out.oms.snapshot.future.push_back(
        Voter{"u" + std::to_string(i + 1), sp.items[i], Role::manipulator});
  for (size_t i = 0; i < sq.items.size(); ++i)
    out.oms.snapshot.future.push_back(
        Voter{"w" + std::to_string(i + 1), sq.items[i], Role::nonmanipulator});

  out.rule = Rule::veto();
  out.variant.direction = Direction::constructive;
  out.variant.target = Target::segment;
  out.variant.weighting = Weighting::weighted;
  out.variant.winner_model = WinnerModel::nonunique;
  return out;
}

GenResult embed_standard_wcm(const StandardWcm& wcm, Direction direction) {
  if (wcm.coalition_weights.empty())
    fail(Err::EmptyCoalition, "the coalition must have at least one member");
  bool found = false;
  for (auto& c : wcm.candidates) found = found || c == wcm.target;
  if (!found)
    fail(Err::DistinguishedNotCandidate, "target is not a candidate");

  GenResult out;
  out.oms.candidates = wcm.candidates;
  if (direction == Direction::constructive) {
    out.oms.sigma = top_ballot(wcm.candidates, wcm.target);
  } else {
    out.oms.sigma = veto_ballot(wcm.candidates, wcm.target);
  }
  out.oms.distinguished = wcm.target;
  out.oms.snapshot.past = wcm.fixed_votes;

  std::set<std::string> used;
  for (auto& pv : wcm.fixed_votes) used.insert(pv.voter.name);
  auto fresh_name = [&](size_t i) {
    std::string nm = "t" + std::to_string(i + 1);
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    return nm;
  };
  out.oms.snapshot.current =
      Voter{fresh_name(0), wcm.coalition_weights[0], Role::manipulator};
  for (size_t i = 1; i < wcm.coalition_weights.size(); ++i)
    out.oms.snapshot.future.push_back(
        Voter{fresh_name(i), wcm.coalition_weights[i], Role::manipulator});

  out.rule = wcm.rule;
  out.variant.direction = direction;
  out.variant.target = Target::segment;
  out.variant.weighting = Weighting::weighted;
  out.variant.winner_model = WinnerModel::nonunique;
  return out;
}

}  // namespace seqvote
