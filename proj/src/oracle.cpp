#include "seqvote/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace seqvote {

namespace {

// Is this winner set a win for the coalition?
bool leaf_ok(const Compiled& g, const std::vector<char>& win) {
  int count = 0;
  int sole = -1;
  for (int c = 0; c < g.m; ++c)
    if (win[static_cast<size_t>(c)]) {
      ++count;
      sole = c;
    }
  bool constructive = g.variant.direction == Direction::constructive;
  bool unique = g.variant.winner_model == WinnerModel::unique;
  if (constructive) {
    if (unique) return count == 1 && g.goal[static_cast<size_t>(sole)];
    for (int c = 0; c < g.m; ++c)
      if (win[static_cast<size_t>(c)] && g.goal[static_cast<size_t>(c)])
        return true;
    return false;
  }
  if (unique) return !(count == 1 && g.goal[static_cast<size_t>(sole)]);
  for (int c = 0; c < g.m; ++c)
    if (win[static_cast<size_t>(c)] && g.goal[static_cast<size_t>(c)])
      return false;
  return true;
}

// Scoring-family games carry only the running score vector; distinct ballots
// inducing the same score assignment are one move. Memoization on (ply,
// scores) kicks in once the tree is deep enough to pay for it.
struct ScoringGame {
  const Compiled& g;
  std::vector<long long> alpha;
  std::vector<std::vector<long long>> moves;  // alpha value per candidate
  long long cap;
  long long nodes = 0;
  bool use_memo = false;
  std::vector<std::map<std::vector<Big>, bool>> memo;

  explicit ScoringGame(const Compiled& game, const Rule& rule,
                       const SearchLimits& limits)
      : g(game), cap(limits.node_cap) {
    alpha = scoring_vector(rule, g.m);
    std::vector<long long> perm = alpha;
    std::sort(perm.begin(), perm.end());
    do {
      moves.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    double est = 1.0;
    for (size_t p = 0; p < g.plies.size() && est < 1e9; ++p)
      est *= static_cast<double>(moves.size());
    use_memo = est > 50'000.0;
    if (use_memo) memo.resize(g.plies.size());
  }

  void tick() {
    if (++nodes > cap) throw BudgetError(cap);
  }

  bool eval(size_t ply, const std::vector<Big>& sc) {
    tick();
    if (ply == g.plies.size()) return leaf_ok(g, winner_mask(sc));
    if (use_memo) {
      auto it = memo[ply].find(sc);
      if (it != memo[ply].end()) return it->second;
    }
    const Compiled::Ply& p = g.plies[ply];
    bool exists = p.role == Role::manipulator;
    bool result;
    if (p.fixed || p.w == 0) {
      // a committed ballot is a single move; a weight-zero voter cannot
      // change the scores, so any move stands in for all of them
      std::vector<Big> child = sc;
      if (p.fixed && p.w != 0)
        for (int r = 0; r < g.m; ++r)
          if (alpha[static_cast<size_t>(r)] != 0)
            child[static_cast<size_t>((*p.fixed)[static_cast<size_t>(r)])] +=
                p.w * alpha[static_cast<size_t>(r)];
      result = eval(ply + 1, child);
    } else {
      result = !exists;
      for (const auto& mv : moves) {
        std::vector<Big> child = sc;
        for (int c = 0; c < g.m; ++c)
          if (mv[static_cast<size_t>(c)] != 0)
            child[static_cast<size_t>(c)] += p.w * mv[static_cast<size_t>(c)];
        bool v = eval(ply + 1, child);
        if (v == exists) {
          result = exists;
          break;
        }
      }
    }
    if (use_memo) memo[ply].emplace(sc, result);
    return result;
  }

  bool run(SearchStats* stats) {
    std::vector<Big> start = scores_of(alpha, g.m, g.past);
    bool v = eval(0, start);
    if (stats) stats->nodes = nodes;
    return v;
  }
};

// Tiered games need the full ballots: every |C|! ballot is a distinct move
// and the leaf re-runs the rule on the whole profile.
struct TieredGame {
  const Compiled& g;
  std::vector<std::vector<int>> perms;
  std::vector<const std::vector<int>*> chosen;
  long long cap;
  long long nodes = 0;

  explicit TieredGame(const Compiled& game, const SearchLimits& limits)
      : g(game), cap(limits.node_cap) {
    std::vector<int> p(static_cast<size_t>(g.m));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    chosen.resize(g.plies.size(), nullptr);
  }

  void tick() {
    if (++nodes > cap) throw BudgetError(cap);
  }

  bool leaf() {
    std::vector<std::pair<std::string_view, const std::vector<int>*>> votes;
    votes.reserve(g.past.size() + g.plies.size());
    for (auto& c : g.past) votes.emplace_back(c.voter, &c.ballot);
    for (size_t i = 0; i < g.plies.size(); ++i)
      votes.emplace_back(g.plies[i].voter, chosen[i]);
    return leaf_ok(g, tiered_winner_mask(g.names, votes));
  }

  bool eval(size_t ply) {
    tick();
    if (ply == g.plies.size()) return leaf();
    const Compiled::Ply& p = g.plies[ply];
    bool exists = p.role == Role::manipulator;
    if (p.fixed) {
      chosen[ply] = &*p.fixed;
      return eval(ply + 1);
    }
    for (const auto& mv : perms) {
      chosen[ply] = &mv;
      bool v = eval(ply + 1);
      if (v == exists) return exists;
    }
    return !exists;
  }

  bool run(SearchStats* stats) {
    bool v = eval(0);
    if (stats) stats->nodes = nodes;
    return v;
  }
};

}  // namespace

bool eval_game(const Compiled& game, const Rule& rule,
               const SearchLimits& limits, SearchStats* stats) {
  if (rule.kind == Rule::Kind::tiered)
    return TieredGame(game, limits).run(stats);
  return ScoringGame(game, rule, limits).run(stats);
}

bool decide_online(const Oms& oms, const Rule& rule, const Variant& variant,
                   const SearchLimits& limits, SearchStats* stats) {
  Compiled g = compile(oms, variant, false);
  return eval_game(g, rule, limits, stats);
}

std::vector<char> full_profile(const Oms& oms, const Rule& rule,
                               const Variant& variant,
                               const SearchLimits& limits) {
  compile(oms, variant, true);  // validate everything but d once up front
  std::vector<char> bits;
  bits.reserve(oms.candidates.size());
  Oms copy = oms;
  for (auto& c : oms.candidates) {
    copy.distinguished = c;
    bits.push_back(decide_online(copy, rule, variant, limits) ? 1 : 0);
  }
  return bits;
}

bool decide_schedule_robust(const ScheduleFreeState& state, const Rule& rule,
                            const Variant& variant, ScheduleMethod method,
                            const SearchLimits& limits) {
  validate_state(state, variant);
  const size_t r = state.remaining.size();

  if (method == ScheduleMethod::manipulators_first) {
    // The most demanding order: every manipulator commits before any
    // nonmanipulator replies; input order within each group.
    std::vector<int> order;
    order.reserve(r);
    for (size_t i = 0; i < r; ++i)
      if (state.remaining[i].role == Role::manipulator)
        order.push_back(static_cast<int>(i));
    for (size_t i = 0; i < r; ++i)
      if (state.remaining[i].role != Role::manipulator)
        order.push_back(static_cast<int>(i));
    return eval_game(compile_order(state, variant, order), rule, limits,
                     nullptr);
  }

  // Exhaustive: conjoin every distinct order. Voters that cannot be told
  // apart by the game collapse: same role and weight, and for the tiered
  // rule also the same name (it reads names).
  auto key = [&](int i) {
    const Voter& v = state.remaining[static_cast<size_t>(i)];
    std::string k = (v.role == Role::manipulator ? "m|" : "n|") +
                    to_string(v.weight);
    if (rule.kind == Rule::Kind::tiered) k += "|" + v.name;
    return k;
  };
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int a, int b) { return key(a) < key(b); };
  std::sort(order.begin(), order.end(), less);
  do {
    if (!eval_game(compile_order(state, variant, order), rule, limits,
                   nullptr))
      return false;
  } while (std::next_permutation(order.begin(), order.end(), less));
  return true;
}

}  // namespace seqvote
