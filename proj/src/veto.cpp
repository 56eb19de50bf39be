#include "seqvote/veto.hpp"

#include <algorithm>
#include <functional>

namespace seqvote {

WeightSet::WeightSet(std::vector<Big> weights) {
  std::sort(weights.begin(), weights.end(), std::greater<Big>());
  for (auto& w : weights) {
    if (w < 0) fail(Err::BadPartitionInput, "negative weight");
    if (w == 0) continue;  // zeros never change a sum
    if (!groups_.empty() && groups_.back().first == w)
      ++groups_.back().second;
    else
      groups_.emplace_back(w, 1);
    total_ += w;
  }
  suffix_.assign(groups_.size() + 1, 0);
  for (size_t i = groups_.size(); i-- > 0;)
    suffix_[i] = suffix_[i + 1] + groups_[i].first * groups_[i].second;
}

std::optional<Big> WeightSet::max_sum_at_most(const Big& cap) const {
  if (cap < 0) return std::nullopt;
  if (total_ <= cap) return total_;
  Big best = 0;
  // branch and bound over duplicate groups, taking many copies first
  std::function<void(size_t, const Big&)> rec = [&](size_t gi, const Big& cur) {
    if (best == cap) return;
    if (cur + suffix_[gi] <= cap) {  // everything left fits
      if (cur + suffix_[gi] > best) best = cur + suffix_[gi];
      return;
    }
    if (gi == groups_.size()) {
      if (cur > best) best = cur;
      return;
    }
    const Big& w = groups_[gi].first;
    for (int take = groups_[gi].second; take >= 0; --take) {
      Big v = cur + w * take;
      if (v > cap) continue;
      if (v + suffix_[gi + 1] <= best) break;  // smaller takes only shrink
      rec(gi + 1, v);
      if (best == cap) return;
    }
  };
  rec(0, 0);
  return best;
}

std::optional<Big> WeightSet::min_sum_at_least(const Big& lo) const {
  if (lo <= 0) return Big(0);
  if (lo > total_) return std::nullopt;
  // the complement of the largest sum <= total - lo
  auto p = max_sum_at_most(total_ - lo);
  return total_ - *p;
}

bool WeightSet::any_sum_in(const Big& lo, const Big& hi) const {
  if (hi < lo || hi < 0) return false;
  auto p = max_sum_at_most(hi);
  return p && *p >= lo;
}

namespace {

struct Demands {
  std::vector<Big> active;  // positive demands, descending
  Big sum = 0;
};

Demands positive_demands(const std::vector<Big>& demands) {
  Demands d;
  for (auto& x : demands)
    if (x > 0) {
      d.active.push_back(x);
      d.sum += x;
    }
  std::sort(d.active.begin(), d.active.end(), std::greater<Big>());
  return d;
}

// Exact assignment search for three or more demand groups: every weight goes
// to some group (an unused weight can always be dumped anywhere), pruned by
// remaining mass and by symmetry between equal residual demands.
bool assign_search(const std::vector<Big>& ws, size_t i,
                   const std::vector<Big>& suffix, std::vector<Big>& need) {
  Big open = 0;
  bool any = false;
  for (auto& n : need)
    if (n > 0) {
      open += n;
      any = true;
    }
  if (!any) return true;
  if (suffix[i] < open) return false;
  // i < ws.size() here: suffix[size] = 0 < open
  std::vector<const Big*> tried;
  for (size_t j = 0; j < need.size(); ++j) {
    if (need[j] <= 0) continue;
    bool dup = false;
    for (auto* t : tried)
      if (*t == need[j]) {
        dup = true;
        break;
      }
    if (dup) continue;
    tried.push_back(&need[j]);
    Big saved = need[j];
    need[j] -= ws[i];
    bool ok = assign_search(ws, i + 1, suffix, need);
    need[j] = saved;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool partition_feasible(const std::vector<Big>& weights,
                        const std::vector<Big>& demands) {
  for (auto& d : demands)
    if (d < 0) fail(Err::BadPartitionInput, "negative demand");
  Demands dd = positive_demands(demands);
  if (dd.active.empty()) return true;

  WeightSet ws(weights);  // validates nonnegativity
  if (ws.total() < dd.sum) return false;
  if (dd.active.size() == 1) return true;
  if (dd.active.size() == 2)
    // one group takes a sum in [d1, total - d2]; the rest covers d2
    return ws.any_sum_in(dd.active[0], ws.total() - dd.active[1]);

  std::vector<Big> items;
  for (auto& w : weights)
    if (w > 0) items.push_back(w);
  std::sort(items.begin(), items.end(), std::greater<Big>());
  std::vector<Big> suffix(items.size() + 1, 0);
  for (size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + items[i];
  return assign_search(items, 0, suffix, dd.active);
}

namespace {

Big floor_div2(const Big& v) {
  // cpp_int division truncates toward zero; make it floor for negatives
  Big q = v / 2;
  if (v < 0 && q * 2 != v) --q;
  return q;
}

Big clip0(const Big& v) { return v > 0 ? v : Big(0); }

bool feasible_at(const std::vector<Big>& weights,
                 const std::vector<Big>& maxscores, const Big& t) {
  std::vector<Big> d;
  d.reserve(maxscores.size());
  for (auto& ms : maxscores) d.push_back(clip0(ms - t));
  return partition_feasible(weights, d);
}

}  // namespace

Big min_threshold(const std::vector<Big>& weights,
                  const std::vector<Big>& maxscores) {
  for (auto& ms : maxscores)
    if (ms < 0) fail(Err::BadPartitionInput, "negative maxscore");
  if (maxscores.empty()) return 0;

  Big result;
  if (maxscores.size() == 1) {
    WeightSet ws(weights);
    result = clip0(maxscores[0] - ws.total());
  } else if (maxscores.size() == 2) {
    // minimize max(M1 - s, M2 - (S - s), 0) over achievable sums s; the
    // unclipped objective is V-shaped with its crossing at (M1 - M2 + S)/2,
    // so only the nearest achievable sums on each side matter
    const Big &m1 = maxscores[0], &m2 = maxscores[1];
    WeightSet ws(weights);
    const Big& s_total = ws.total();
    Big crossing = floor_div2(m1 - m2 + s_total);
    std::optional<Big> best;
    if (auto p = ws.max_sum_at_most(crossing)) {
      Big obj = clip0(std::max(Big(m1 - *p), Big(m2 - (s_total - *p))));
      best = obj;
    }
    if (auto q = ws.min_sum_at_least(crossing + 1)) {
      Big obj = clip0(std::max(Big(m1 - *q), Big(m2 - (s_total - *q))));
      if (!best || obj < *best) best = obj;
    }
    result = *best;  // one side always exists: 0 and total are achievable
  } else {
    Big lo = 0, hi = *std::max_element(maxscores.begin(), maxscores.end());
    while (lo < hi) {
      Big mid = floor_div2(lo + hi);
      if (feasible_at(weights, maxscores, mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    result = lo;
  }

  // feasibility is monotone in t; the boundary must sit exactly at result
  if (!feasible_at(weights, maxscores, result))
    fail(Err::BadPartitionInput, "threshold feasibility is not monotone");
  if (result > 0 && feasible_at(weights, maxscores, result - 1))
    fail(Err::BadPartitionInput, "threshold is not minimal");
  return result;
}

namespace {

struct VetoState {
  Compiled g;
  std::vector<Big> vetoes;        // past weight against each candidate
  Big past_total = 0;
  Big pending_total = 0;
  std::vector<Big> mani, nonmani;  // pending weights by role (u onward)

  Big maxscore(int c) const {
    return past_total - vetoes[static_cast<size_t>(c)] + pending_total;
  }
};

VetoState veto_state(const Oms& oms, const Variant& variant) {
  VetoState s{compile(oms, variant, false), {}, 0, 0, {}, {}};
  s.vetoes.assign(static_cast<size_t>(s.g.m), 0);
  for (auto& c : s.g.past) {
    s.vetoes[static_cast<size_t>(c.ballot.back())] += c.w;
    s.past_total += c.w;
  }
  for (auto& p : s.g.plies) {
    s.pending_total += p.w;
    (p.role == Role::manipulator ? s.mani : s.nonmani).push_back(p.w);
  }
  return s;
}

void check_veto_variant(const Variant& v) {
  if (v.freeform) fail(Err::WrongVariant, "solver handles non-freeform instances only");
  if (v.winner_model != WinnerModel::nonunique)
    fail(Err::WrongVariant, "solver handles the nonunique-winner model only");
  if (v.direction != Direction::constructive)
    fail(Err::WrongVariant, "solver handles constructive instances only");
  if (v.target != Target::segment)
    fail(Err::WrongVariant, "solver handles segment targets only");
}

}  // namespace

bool decide_veto_weighted(const Oms& oms, const Variant& variant) {
  check_veto_variant(variant);
  VetoState s = veto_state(oms, variant);
  int rd = s.g.sigma_rank[static_cast<size_t>(s.g.dist)];

  std::vector<Big> hated_ms, liked_ms;
  for (int r = 0; r < s.g.m; ++r) {
    int c = s.g.sigma[static_cast<size_t>(r)];
    (r > rd ? hated_ms : liked_ms).push_back(s.maxscore(c));
  }
  // what the coalition can veto every hated candidate down to, versus what
  // the adversaries can veto every liked candidate down to
  Big t1 = min_threshold(s.mani, hated_ms);
  Big t2 = min_threshold(s.nonmani, liked_ms);
  return t1 <= t2;
}

bool decide_veto3_weighted(const Oms& oms, const Variant& variant) {
  check_veto_variant(variant);
  VetoState s = veto_state(oms, variant);
  if (s.g.m != 3)
    fail(Err::WrongVariant, "three-candidate solver needs exactly 3 candidates");

  int a = s.g.sigma[0], b = s.g.sigma[1], c = s.g.sigma[2];
  const Big &va = s.vetoes[static_cast<size_t>(a)],
            &vb = s.vetoes[static_cast<size_t>(b)],
            &vc = s.vetoes[static_cast<size_t>(c)];
  Big wm = 0, wn = 0;
  for (auto& w : s.mani) wm += w;
  for (auto& w : s.nonmani) wn += w;
  int rd = s.g.sigma_rank[static_cast<size_t>(s.g.dist)];

  if (rd == 2) return true;  // goal contains everyone

  if (rd == 0) {
    // goal {a}: the adversaries' best is all-in against a; the coalition
    // splits its vetoes s on b, rest on c, never touching a
    WeightSet mani(s.mani);
    Big lo = va + wn - vb;           // vetoes(b) must reach vetoes(a)
    Big hi = vc + wm - (va + wn);    // and vetoes(c) must as well
    return mani.any_sum_in(lo, hi);
  }

  // d = b, goal {a, b}: the coalition's best is all-in against c; the
  // adversaries split s on a, rest on b, trying to leave c the strict
  // minimum. They succeed iff some achievable split undercuts both.
  WeightSet adv(s.nonmani);
  Big floor_c = vc + wm;
  Big lo = floor_c - va + 1;         // vetoes(a) must exceed vetoes(c)
  Big hi = wn - (floor_c - vb + 1);  // and vetoes(b) must exceed it too
  return !adv.any_sum_in(lo, hi);
}

}  // namespace seqvote
