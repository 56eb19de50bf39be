#include "seqvote/poly.hpp"

#include <algorithm>
#include <numeric>

namespace seqvote {

namespace {

void need(bool ok, const char* what) {
  if (!ok) fail(Err::WrongVariant, what);
}

void check_common(const Variant& v, Direction dir) {
  need(!v.freeform, "solver handles non-freeform instances only");
  need(v.winner_model == WinnerModel::nonunique,
       "solver handles the nonunique-winner model only");
  need(v.direction == dir, "solver handles the other direction");
  need(v.target == Target::segment, "solver handles segment targets only");
}

// current score under plurality: weight whose ballots top the candidate
std::vector<Big> plurality_current(const Compiled& g) {
  std::vector<Big> cur(static_cast<size_t>(g.m), 0);
  for (auto& c : g.past) cur[static_cast<size_t>(c.ballot[0])] += c.w;
  return cur;
}

struct PendingSplit {
  Big wm = 0, wn = 0;          // manipulator weight from u on, nonmanipulator after u
  long long n1 = 0, n0 = 0;    // head counts
};

PendingSplit pending_split(const Compiled& g) {
  PendingSplit s;
  for (auto& p : g.plies) {
    if (p.role == Role::manipulator) {
      s.wm += p.w;
      ++s.n1;
    } else {
      s.wn += p.w;
      ++s.n0;
    }
  }
  return s;
}

}  // namespace

bool decide_plurality_constructive_weighted(const Oms& oms,
                                            const Variant& variant) {
  check_common(variant, Direction::constructive);
  Compiled g = compile(oms, variant, false);
  std::vector<Big> cur = plurality_current(g);
  PendingSplit pend = pending_split(g);
  int rd = g.sigma_rank[static_cast<size_t>(g.dist)];

  // best liked candidate, boosted by the whole coalition weight
  Big best = -1;
  for (int c = 0; c < g.m; ++c)
    if (g.sigma_rank[static_cast<size_t>(c)] <= rd)
      best = std::max(best, cur[static_cast<size_t>(c)]);
  best += pend.wm;

  // the adversaries' strongest play: all their weight on the strongest
  // hated candidate; no hated candidates means nothing to beat
  bool any_hated = false;
  Big threat = 0;
  for (int c = 0; c < g.m; ++c)
    if (g.sigma_rank[static_cast<size_t>(c)] > rd) {
      if (!any_hated || cur[static_cast<size_t>(c)] > threat)
        threat = cur[static_cast<size_t>(c)];
      any_hated = true;
    }
  if (!any_hated) return true;
  threat += pend.wn;
  return best >= threat;
}

bool decide_plurality_destructive_weighted(const Oms& oms,
                                           const Variant& variant) {
  check_common(variant, Direction::destructive);
  Compiled g = compile(oms, variant, false);
  int rd = g.sigma_rank[static_cast<size_t>(g.dist)];
  if (rd == 0) return false;  // everything would be forbidden

  std::vector<Big> cur = plurality_current(g);
  PendingSplit pend = pending_split(g);
  Big liked = -1, hated = -1;
  for (int c = 0; c < g.m; ++c) {
    if (g.sigma_rank[static_cast<size_t>(c)] < rd)
      liked = std::max(liked, cur[static_cast<size_t>(c)]);
    else
      hated = std::max(hated, cur[static_cast<size_t>(c)]);
  }
  // a liked candidate must strictly outscore every forbidden one even after
  // the adversaries concentrate their weight
  return liked + pend.wm > hated + pend.wn;
}

std::optional<bool> decide_scoring_weighted(const std::vector<long long>& alpha,
                                            const Oms& oms,
                                            const Variant& variant) {
  check_common(variant, Direction::constructive);
  Rule rule = Rule::scoring(alpha);
  validate_oms(oms, variant);
  scoring_vector(rule, static_cast<int>(oms.candidates.size()));

  size_t m = alpha.size();
  if (alpha[0] == alpha[m - 1]) {
    // flat vector: everyone always ties, so every goal set is hit
    return true;
  }
  if (m >= 2 && alpha[0] > alpha[1] && alpha[1] == alpha[m - 1]) {
    // (a, b, b, ..., b) is plurality up to an affine shift
    return decide_plurality_constructive_weighted(oms, variant);
  }
  return std::nullopt;
}

bool decide_kapproval_kveto_unweighted(const Oms& oms, const Rule& rule,
                                       const Variant& variant, TieBreak tie) {
  check_common(variant, Direction::constructive);
  need(variant.weighting == Weighting::unweighted,
       "greedy simulation handles unweighted instances only");
  need(rule.kind == Rule::Kind::k_approval || rule.kind == Rule::Kind::k_veto,
       "greedy simulation handles k-approval and k-veto only");
  Compiled g = compile(oms, variant, false);
  std::vector<long long> alpha = scoring_vector(rule, g.m);
  int ell = static_cast<int>(std::count(alpha.begin(), alpha.end(), 1));
  int rd = g.sigma_rank[static_cast<size_t>(g.dist)];

  std::vector<long long> approvals(static_cast<size_t>(g.m), 0);
  for (auto& c : g.past)
    for (int r = 0; r < ell; ++r)
      ++approvals[static_cast<size_t>(c.ballot[static_cast<size_t>(r)])];

  auto name_less = [&](int a, int b) {
    bool asc = tie == TieBreak::name_ascending;
    const std::string& na = g.names[static_cast<size_t>(a)];
    const std::string& nb = g.names[static_cast<size_t>(b)];
    return asc ? na < nb : nb < na;
  };

  for (auto& p : g.plies) {
    // liked candidates first, most approved leading; then the rest, least
    // approved leading
    std::vector<int> order(static_cast<size_t>(g.m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      bool la = g.sigma_rank[static_cast<size_t>(a)] <= rd;
      bool lb = g.sigma_rank[static_cast<size_t>(b)] <= rd;
      if (la != lb) return la;
      long long aa = approvals[static_cast<size_t>(a)];
      long long ab = approvals[static_cast<size_t>(b)];
      if (aa != ab) return la ? aa > ab : aa < ab;
      return name_less(a, b);
    });
    if (p.role == Role::manipulator)
      for (int i = 0; i < ell; ++i)
        ++approvals[static_cast<size_t>(order[static_cast<size_t>(i)])];
    else
      for (int i = g.m - ell; i < g.m; ++i)
        ++approvals[static_cast<size_t>(order[static_cast<size_t>(i)])];
  }

  long long best = *std::max_element(approvals.begin(), approvals.end());
  for (int c = 0; c < g.m; ++c)
    if (approvals[static_cast<size_t>(c)] == best &&
        g.sigma_rank[static_cast<size_t>(c)] <= rd)
      return true;
  return false;
}

bool decide_1veto_threshold(const Oms& oms, const Variant& variant) {
  check_common(variant, Direction::constructive);
  need(variant.weighting == Weighting::unweighted,
       "threshold scan handles unweighted instances only");
  Compiled g = compile(oms, variant, false);
  int rd = g.sigma_rank[static_cast<size_t>(g.dist)];
  if (rd == g.m - 1) return true;  // d at sigma-bottom

  long long pending = static_cast<long long>(g.plies.size());
  long long total = static_cast<long long>(g.past.size()) + pending;
  // the best score candidate c can still reach: every vote not yet against it
  std::vector<long long> maxscore(static_cast<size_t>(g.m), pending);
  for (auto& c : g.past)
    for (int x = 0; x < g.m - 1; ++x)
      ++maxscore[static_cast<size_t>(c.ballot[static_cast<size_t>(x)])];

  long long n1 = 0, n0 = 0;
  for (auto& p : g.plies) (p.role == Role::manipulator ? n1 : n0)++;

  auto clip = [](long long v) { return v > 0 ? v : 0; };
  for (long long t = 0; t <= total; ++t) {
    long long mani_needed = 0, adv_needed = 0;
    for (int c = 0; c < g.m; ++c) {
      long long ms = maxscore[static_cast<size_t>(c)];
      if (g.sigma_rank[static_cast<size_t>(c)] > rd)
        mani_needed += clip(ms - t);
      else
        adv_needed += clip(ms - (t - 1));
    }
    if (mani_needed <= n1 && adv_needed > n0) return true;
  }
  return false;
}

}  // namespace seqvote
