#include "seqvote/instance_io.hpp"

#include <charconv>
#include <cstddef>
#include <string>
#include <utility>

namespace seqvote {

namespace {

bool ws_char(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && ws_char(s[a])) ++a;
  while (b > a && ws_char(s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && ws_char(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !ws_char(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Lines paired with their 1-based numbers; tolerates a final line without a
// newline.
std::vector<std::pair<int, std::string>> split_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int n = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      out.emplace_back(n++, std::string(text.substr(start, i - start)));
      start = i + 1;
      if (i == text.size()) break;
    }
  }
  if (!text.empty() && text.back() == '\n') out.pop_back();
  return out;
}

std::optional<Big> parse_big(std::string_view t) {
  if (t.empty()) return std::nullopt;
  std::size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return std::nullopt;
  for (std::size_t j = i; j < t.size(); ++j)
    if (t[j] < '0' || t[j] > '9') return std::nullopt;
  return Big(std::string(t));
}

std::optional<long long> parse_ll(std::string_view t) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) return std::nullopt;
  return v;
}

Ballot parse_ballot_text(std::string_view s, int line) {
  Ballot b;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '>') {
      std::string_view piece = trim(s.substr(start, i - start));
      if (piece.empty())
        throw ParseError(line, 1, "empty candidate name in ballot");
      b.order.emplace_back(piece);
      start = i + 1;
    }
  }
  return b;
}

Variant parse_variant_tokens(const std::vector<std::string>& toks, int line) {
  auto die = [&](const std::string& msg) {
    throw ParseError(line, 1, "variant: " + msg);
  };
  std::size_t i = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (i >= toks.size()) die(std::string("missing ") + what);
    return toks[i++];
  };
  Variant v;
  {
    const std::string& t = need("constructive|destructive");
    if (t == "constructive") v.direction = Direction::constructive;
    else if (t == "destructive") v.direction = Direction::destructive;
    else die("expected constructive|destructive, got '" + t + "'");
  }
  {
    const std::string& t = need("segment|pinpoint");
    if (t == "segment") v.target = Target::segment;
    else if (t == "pinpoint") v.target = Target::pinpoint;
    else die("expected segment|pinpoint, got '" + t + "'");
  }
  {
    const std::string& t = need("weighted|unweighted");
    if (t == "weighted") v.weighting = Weighting::weighted;
    else if (t == "unweighted") v.weighting = Weighting::unweighted;
    else die("expected weighted|unweighted, got '" + t + "'");
  }
  {
    const std::string& t = need("nonunique|unique");
    if (t == "nonunique") v.winner_model = WinnerModel::nonunique;
    else if (t == "unique") v.winner_model = WinnerModel::unique;
    else die("expected nonunique|unique, got '" + t + "'");
  }
  if (i < toks.size() && toks[i] == "freeform") {
    v.freeform = true;
    ++i;
  }
  if (i < toks.size() && toks[i].rfind("bound=", 0) == 0) {
    auto n = parse_ll(std::string_view(toks[i]).substr(6));
    if (!n) die("bad bound '" + toks[i] + "'");
    v.coalition_bound = *n;
    ++i;
  }
  if (i < toks.size()) die("unexpected token '" + toks[i] + "'");
  return v;
}

std::string ballot_text(const Ballot& b) {
  std::string s;
  for (std::size_t i = 0; i < b.order.size(); ++i) {
    if (i) s += '>';
    s += b.order[i];
  }
  return s;
}

std::string variant_text(const Variant& v) {
  std::string s =
      v.direction == Direction::constructive ? "constructive" : "destructive";
  s += v.target == Target::segment ? " segment" : " pinpoint";
  s += v.weighting == Weighting::weighted ? " weighted" : " unweighted";
  s += v.winner_model == WinnerModel::nonunique ? " nonunique" : " unique";
  if (v.freeform) s += " freeform";
  if (v.coalition_bound) s += " bound=" + std::to_string(*v.coalition_bound);
  return s;
}

std::string voter_text(const Voter& v) {
  std::string s = v.name;
  s += v.role == Role::manipulator ? " manip" : " nonmanip";
  s += " w=" + to_string(v.weight);
  return s;
}

}  // namespace

Rule parse_rule_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) fail(Err::Parse, "rule: missing rule name");
  const std::string& head = tokens[0];
  auto need_int = [](const std::string& tok) {
    auto v = parse_ll(tok);
    if (!v) fail(Err::Parse, "rule: bad integer '" + tok + "'");
    return *v;
  };
  if (head == "plurality" || head == "veto" || head == "tiered") {
    if (tokens.size() != 1)
      fail(Err::Parse, "rule: '" + head + "' takes no arguments");
    if (head == "plurality") return Rule::plurality();
    if (head == "veto") return Rule::veto();
    return Rule::tiered();
  }
  if (head == "approval" || head == "kveto") {
    if (tokens.size() != 2)
      fail(Err::Parse, "rule: '" + head + "' takes exactly one integer");
    long long k = need_int(tokens[1]);
    if (k < 1 || k > 1'000'000)
      fail(Err::BadScoringVector, "rule: k must be in 1..1000000");
    return head == "approval" ? Rule::approval(static_cast<int>(k))
                              : Rule::kveto(static_cast<int>(k));
  }
  if (head == "scoring") {
    if (tokens.size() < 2)
      fail(Err::Parse, "rule: 'scoring' needs at least one value");
    std::vector<long long> alpha;
    for (std::size_t i = 1; i < tokens.size(); ++i)
      alpha.push_back(need_int(tokens[i]));
    return Rule::scoring(alpha);
  }
  fail(Err::Parse, "rule: unknown rule '" + head + "'");
}

InstanceDoc parse_instance(std::string_view text) {
  InstanceDoc doc;
  bool have_candidates = false, have_sigma = false, have_d = false,
       have_rule = false, have_variant = false, have_voters = false;
  bool in_voters = false, seen_pending = false, seen_unordered = false;
  auto lines = split_lines(text);
  for (const auto& [ln, raw] : lines) {
    std::string content = raw;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      content = raw.substr(0, hash);
      std::string_view c = trim(std::string_view(raw).substr(hash + 1));
      if (c.rfind("label:", 0) == 0) {
        std::string_view val = trim(c.substr(6));
        if (doc.label)
          throw ParseError(ln, static_cast<int>(hash) + 1,
                           "duplicate label comment");
        if (val == "YES") doc.label = true;
        else if (val == "NO") doc.label = false;
        else
          throw ParseError(ln, static_cast<int>(hash) + 1,
                           "label must be YES or NO");
      }
    }
    std::string_view body = trim(content);
    if (body.empty()) continue;

    if (!in_voters) {
      std::size_t colon = body.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(ln, 1, "expected a section like 'candidates: ...'");
      std::string key(trim(body.substr(0, colon)));
      std::string_view rest = body.substr(colon + 1);
      auto toks = split_ws(rest);
      auto once = [&](bool& flag) {
        if (flag) throw ParseError(ln, 1, "duplicate " + key + ": section");
        flag = true;
      };
      if (key == "candidates") {
        once(have_candidates);
        doc.candidates = std::move(toks);
      } else if (key == "sigma") {
        once(have_sigma);
        if (toks.size() != 1)
          throw ParseError(ln, 1, "sigma: expected one ballot like a>b>c");
        doc.sigma = parse_ballot_text(toks[0], ln);
      } else if (key == "d") {
        once(have_d);
        if (toks.size() != 1)
          throw ParseError(ln, 1, "d: takes exactly one candidate name");
        doc.distinguished = toks[0];
      } else if (key == "rule") {
        once(have_rule);
        try {
          doc.rule = parse_rule_tokens(toks);
        } catch (const Error& e) {
          if (e.code == Err::Parse) throw ParseError(ln, 1, e.what());
          throw;
        }
      } else if (key == "variant") {
        once(have_variant);
        doc.variant = parse_variant_tokens(toks, ln);
      } else if (key == "voters") {
        once(have_voters);
        if (!toks.empty())
          throw ParseError(ln, 1, "voters: takes no inline value");
        in_voters = true;
      } else {
        throw ParseError(ln, 1, "unknown section '" + key + "'");
      }
    } else {
      auto toks = split_ws(body);
      if (toks.size() == 1 && toks[0] == "unordered") {
        if (seen_pending)
          throw ParseError(ln, 1, "'unordered' cannot follow a pending voter");
        if (seen_unordered)
          throw ParseError(ln, 1, "duplicate 'unordered' line");
        seen_unordered = true;
        doc.schedule_free = true;
        continue;
      }
      if (toks.size() < 3)
        throw ParseError(ln, 1,
                         "voter line needs '<name> manip|nonmanip w=<int>'");
      Voter v;
      v.name = toks[0];
      if (toks[1] == "manip") v.role = Role::manipulator;
      else if (toks[1] == "nonmanip") v.role = Role::nonmanipulator;
      else
        throw ParseError(ln, 1, "expected manip|nonmanip, got '" + toks[1] + "'");
      if (toks[2].rfind("w=", 0) != 0)
        throw ParseError(ln, 1, "expected w=<int>, got '" + toks[2] + "'");
      auto w = parse_big(std::string_view(toks[2]).substr(2));
      if (!w) throw ParseError(ln, 1, "bad weight '" + toks[2] + "'");
      v.weight = *w;
      std::size_t i = 3;
      bool pending = false;
      std::optional<Ballot> vote;
      if (i < toks.size() && toks[i] == "pending") {
        pending = true;
        ++i;
      }
      if (i < toks.size() && toks[i] == "vote:") {
        if (i + 1 >= toks.size())
          throw ParseError(ln, 1, "vote: needs a ballot like a>b>c");
        vote = parse_ballot_text(toks[i + 1], ln);
        i += 2;
      }
      if (i < toks.size())
        throw ParseError(ln, 1, "unexpected token '" + toks[i] + "'");

      if (pending) {
        if (seen_unordered)
          throw ParseError(ln, 1, "a schedule-free instance has no pending voter");
        if (seen_pending) throw ParseError(ln, 1, "duplicate pending voter");
        seen_pending = true;
        doc.current = std::move(v);
        doc.current_fixed = std::move(vote);
      } else if (vote) {
        if (seen_pending || seen_unordered)
          throw ParseError(ln, 1, "cast votes must precede the pending voter");
        doc.past.push_back(PastVote{std::move(v), std::move(*vote)});
      } else {
        if (seen_unordered) doc.remaining.push_back(std::move(v));
        else if (seen_pending) doc.future.push_back(std::move(v));
        else
          throw ParseError(
              ln, 1,
              "future voters must follow the pending voter (or use 'unordered')");
      }
    }
  }
  int end_line = lines.empty() ? 1 : lines.back().first;
  if (!have_candidates)
    throw ParseError(end_line, 1, "missing candidates: section");
  if (!have_sigma) throw ParseError(end_line, 1, "missing sigma: section");
  if (!have_rule) throw ParseError(end_line, 1, "missing rule: section");
  if (!have_variant) throw ParseError(end_line, 1, "missing variant: section");
  if (!have_voters) throw ParseError(end_line, 1, "missing voters: section");
  return doc;
}

std::string serialize_instance(const InstanceDoc& doc) {
  std::string out = "candidates:";
  for (const auto& c : doc.candidates) out += " " + c;
  out += "\nsigma: " + ballot_text(doc.sigma) + "\n";
  if (!doc.distinguished.empty()) out += "d: " + doc.distinguished + "\n";
  out += "rule: " + doc.rule.text() + "\n";
  out += "variant: " + variant_text(doc.variant) + "\n";
  out += "voters:\n";
  for (const auto& pv : doc.past)
    out += "  " + voter_text(pv.voter) + " vote: " + ballot_text(pv.ballot) + "\n";
  if (doc.schedule_free) {
    out += "  unordered\n";
    for (const auto& v : doc.remaining) out += "  " + voter_text(v) + "\n";
  } else {
    if (doc.current) {
      out += "  " + voter_text(*doc.current) + " pending";
      if (doc.current_fixed) out += " vote: " + ballot_text(*doc.current_fixed);
      out += "\n";
    }
    for (const auto& v : doc.future) out += "  " + voter_text(v) + "\n";
  }
  if (doc.label) out += std::string("# label: ") + (*doc.label ? "YES" : "NO") + "\n";
  return out;
}

Oms InstanceDoc::to_oms() const {
  if (schedule_free)
    fail(Err::WrongVariant,
         "schedule-free instance; decide it with the schedule-robust solver");
  if (!current) fail(Err::Parse, "instance has no pending voter");
  Oms oms;
  oms.candidates = candidates;
  oms.sigma = sigma;
  oms.distinguished = distinguished;
  oms.snapshot.past = past;
  oms.snapshot.current = *current;
  oms.snapshot.current_fixed = current_fixed;
  oms.snapshot.future = future;
  return oms;
}

ScheduleFreeState InstanceDoc::to_state() const {
  if (!schedule_free) fail(Err::WrongVariant, "not a schedule-free instance");
  if (current || !future.empty())
    fail(Err::WrongVariant,
         "schedule-free instance cannot carry a pending or ordered voter");
  return ScheduleFreeState{candidates, past, remaining, sigma, distinguished};
}

InstanceDoc doc_from(const GenResult& gen, std::optional<bool> label) {
  InstanceDoc d;
  d.candidates = gen.oms.candidates;
  d.sigma = gen.oms.sigma;
  d.distinguished = gen.oms.distinguished;
  d.rule = gen.rule;
  d.variant = gen.variant;
  d.past = gen.oms.snapshot.past;
  d.current = gen.oms.snapshot.current;
  d.current_fixed = gen.oms.snapshot.current_fixed;
  d.future = gen.oms.snapshot.future;
  d.label = label;
  return d;
}

Cnf parse_dimacs(std::string_view text) {
  auto lines = split_lines(text);
  bool have_p = false;
  long long nv = 0, nc = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> cur;
  for (const auto& [ln, raw] : lines) {
    std::string_view body = trim(raw);
    if (body.empty()) continue;
    if (body[0] == 'c' && (body.size() == 1 || ws_char(body[1]))) continue;
    if (body == "%")
      throw ParseError(ln, 1,
                       "unexpected '%' separator; this reader takes one formula");
    if (body[0] == 'p' && (body.size() == 1 || ws_char(body[1]))) {
      if (have_p) throw ParseError(ln, 1, "duplicate 'p cnf' header");
      auto toks = split_ws(body);
      std::optional<long long> a, b;
      if (toks.size() == 4 && toks[1] == "cnf") {
        a = parse_ll(toks[2]);
        b = parse_ll(toks[3]);
      }
      if (!a || !b || *a < 0 || *b < 0)
        throw ParseError(ln, 1, "expected 'p cnf <vars> <clauses>'");
      if (*a > 1'000'000 || *b > 1'000'000)
        throw ParseError(ln, 1, "formula too large");
      nv = *a;
      nc = *b;
      have_p = true;
      continue;
    }
    if (!have_p)
      throw ParseError(ln, 1, "expected a 'p cnf <vars> <clauses>' header first");
    for (const auto& tok : split_ws(body)) {
      auto lit = parse_ll(tok);
      if (!lit || *lit < -nv || *lit > nv)
        throw ParseError(ln, 1, "bad literal '" + tok + "'");
      if (*lit == 0) {
        clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(*lit));
      }
    }
  }
  int end_line = lines.empty() ? 1 : lines.back().first;
  if (!have_p) throw ParseError(end_line, 1, "missing 'p cnf' header");
  if (!cur.empty())
    throw ParseError(end_line, 1, "unterminated clause (missing 0)");
  if (static_cast<long long>(clauses.size()) != nc)
    throw ParseError(end_line, 1,
                     "clause count mismatch: header says " + std::to_string(nc) +
                         ", found " + std::to_string(clauses.size()));
  return Cnf{static_cast<int>(nv), std::move(clauses)};
}

std::string dimacs_text(const Cnf& f) {
  std::string out = "p cnf " + std::to_string(f.vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) {
    for (int lit : cl) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

std::pair<Cnf, Cnf> parse_dimacs_pair(std::string_view text) {
  std::size_t pos = 0, sep_start = std::string_view::npos, sep_end = 0;
  int ln = 1, sep_line = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = (nl == std::string_view::npos) ? text.size() : nl;
    if (trim(text.substr(pos, end - pos)) == "%") {
      sep_start = pos;
      sep_end = (nl == std::string_view::npos) ? end : nl + 1;
      sep_line = ln;
      break;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++ln;
  }
  if (sep_start == std::string_view::npos)
    throw ParseError(ln, 1, "missing '%' separator line between the two formulas");
  Cnf a = parse_dimacs(text.substr(0, sep_start));
  try {
    Cnf b = parse_dimacs(text.substr(sep_end));
    return {std::move(a), std::move(b)};
  } catch (const ParseError& e) {
    std::string prefix = std::string(err_name(Err::Parse)) + ": line " +
                         std::to_string(e.line) + ", col " +
                         std::to_string(e.col) + ": ";
    std::string msg = e.what();
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    throw ParseError(e.line + sep_line, e.col, msg);
  }
}

}  // namespace seqvote
