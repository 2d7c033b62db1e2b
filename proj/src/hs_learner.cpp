#include "itinf/hs_learner.hpp"

#include "itinf/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace itinf {
namespace {

std::int64_t tgcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
Int tgcd(const Int& a, const Int& b) { return gcd_int(a, b); }

template <class T>
using Pt = std::vector<T>;

template <class T>
T tdet(std::vector<Pt<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Primitive normal of the hyperplane through pts; empty when dependent.
template <class T>
Pt<T> normal_through(const std::vector<const Pt<T>*>& pts) {
  const std::size_t d = pts[0]->size();
  Pt<T> n(d);
  if (d == 2) {
    n[0] = (*pts[1])[1] - (*pts[0])[1];
    n[1] = (*pts[0])[0] - (*pts[1])[0];
  } else {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Pt<T>> minor;
      for (std::size_t i = 1; i < d; ++i) {
        Pt<T> r;
        for (std::size_t c = 0; c < d; ++c)
          if (c != k) r.push_back((*pts[i])[c] - (*pts[0])[c]);
        minor.push_back(std::move(r));
      }
      T det = tdet(std::move(minor));
      n[k] = (k % 2 == 0) ? det : T(-det);
    }
  }
  T g = 0;
  for (const auto& x : n) g = tgcd(g, x);
  if (g == 0) return {};
  for (auto& x : n) x /= g;
  return n;
}

template <class T>
T tdot(const Pt<T>& a, const Pt<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec to_intvec(const Pt<std::int64_t>& p) {
  IntVec v;
  for (auto x : p) v.emplace_back(x);
  return v;
}
IntVec to_intvec(const Pt<Int>& p) { return p; }

template <class T>
bool cells_face(const Pt<T>& a, const std::vector<const Pt<T>*>& c1, const std::vector<const Pt<T>*>& c2) {
  const std::size_t d = a.size();
  if (d == 1) return true;
  if (d == 2) {
    Pt<T> t{-a[1], a[0]};
    T l1 = tdot(t, *c1[0]), h1 = tdot(t, *c1[1]);
    T l2 = tdot(t, *c2[0]), h2 = tdot(t, *c2[1]);
    if (l1 > h1) std::swap(l1, h1);
    if (l2 > h2) std::swap(l2, h2);
    return std::max(l1, l2) <= std::min(h1, h2);
  }
  BasicSet b1, b2;
  for (const auto* p : c1) b1.push_back(to_intvec(*p));
  for (const auto* p : c2) b2.push_back(to_intvec(*p));
  return facing_fm(b1, b2);
}

// Calls f(indices) for every increasing k-subset of [0, n) that avoids `skip`.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, std::size_t skip, F&& f) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      if (i == skip) continue;
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

template <class T>
struct Search {
  std::size_t d = 0;
  std::vector<Pt<T>> pos, neg;  // sorted, distinct

  bool found = false;
  std::vector<std::size_t> best_p, best_n;
  Pt<T> best_a;
  T best_b = 0;  // positive plane: best_a·x + best_b = 0

  void offer(std::vector<std::size_t> ip, std::vector<std::size_t> in, const Pt<T>& a, const T& b) {
    if (found && std::tie(best_p, best_n) <= std::tie(ip, in)) return;
    found = true;
    best_p = std::move(ip);
    best_n = std::move(in);
    best_a = a;
    best_b = b;
  }

  // Anchor cells come from one side and contain `must` when given.
  void run(bool anchor_positive, std::optional<std::size_t> must) {
    const auto& same = anchor_positive ? pos : neg;
    const auto& other = anchor_positive ? neg : pos;
    if (same.size() < d || other.size() < d) return;
    auto visit = [&](std::vector<std::size_t> cell) {
      std::sort(cell.begin(), cell.end());
      std::vector<const Pt<T>*> pts;
      for (auto i : cell) pts.push_back(&same[i]);
      Pt<T> n = normal_through(pts);
      if (n.empty()) return;
      T off = -tdot(n, *pts[0]);
      for (int sgn : {1, -1}) {
        Pt<T> a = n;
        T b = off;
        if (sgn < 0) {
          for (auto& x : a) x = -x;
          b = -b;
        }
        // Orientation: the anchor side is a·x + b >= 0 for positives,
        // a·x + b <= 0 for negatives; the other side sits at distance 1.
        bool ok = true;
        for (const auto& p : same) {
          T v = tdot(a, p) + b;
          if (anchor_positive ? v < 0 : v > 0) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < other.size(); ++i) {
          T v = tdot(a, other[i]) + b;
          if (anchor_positive ? v > -1 : v < 1) { ok = false; break; }
          if (v == (anchor_positive ? T(-1) : T(1))) cand.push_back(i);
        }
        if (!ok || cand.size() < d) continue;
        for_each_subset(cand.size(), d, cand.size(), [&](const std::vector<std::size_t>& sub) {
          std::vector<const Pt<T>*> opp;
          std::vector<std::size_t> oidx;
          for (auto s : sub) {
            opp.push_back(&other[cand[s]]);
            oidx.push_back(cand[s]);
          }
          if (d > 2 && normal_through(opp).empty()) return;
          if (!cells_face(a, pts, opp)) return;
          T bplus = anchor_positive ? b : T(b - 1);
          if (anchor_positive) offer(cell, oidx, a, bplus);
          else offer(oidx, cell, a, bplus);
        });
      }
    };
    if (must) {
      for_each_subset(same.size(), d - 1, *must, [&](const std::vector<std::size_t>& sub) {
        auto cell = sub;
        cell.push_back(*must);
        visit(std::move(cell));
      });
    } else {
      for_each_subset(same.size(), d, same.size(), [&](const std::vector<std::size_t>& sub) { visit(sub); });
    }
  }
};

template <class T>
Pt<T> convert(const IntVec& v) {
  Pt<T> p;
  for (const auto& x : v) p.push_back(static_cast<T>(x));
  return p;
}

template <class T>
std::optional<LockPair> search_impl(const std::vector<Datum>& data, const std::vector<Datum>* must,
                                    std::size_t d) {
  std::vector<IntVec> P, N;
  for (const auto& x : data) (x.label ? P : N).push_back(x.point);
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  Search<T> s;
  s.d = d;
  for (const auto& p : P) s.pos.push_back(convert<T>(p));
  for (const auto& q : N) s.neg.push_back(convert<T>(q));
  if (must) {
    for (const auto& m : *must) {
      const auto& side = m.label ? P : N;
      auto it = std::lower_bound(side.begin(), side.end(), m.point);
      if (it == side.end() || *it != m.point) continue;
      s.run(m.label == 1, static_cast<std::size_t>(it - side.begin()));
    }
  } else {
    s.run(true, std::nullopt);
  }
  if (!s.found) return std::nullopt;
  LockPair lp;
  for (auto i : s.best_p) lp.cplus.push_back(P[i]);
  for (auto i : s.best_n) lp.cminus.push_back(N[i]);
  IntVec a = to_intvec(s.best_a);
  Int b(s.best_b);
  lp.plus = {a, b};
  IntVec na = a;
  for (auto& x : na) x = -x;
  lp.minus = {na, Int(-b - 1)};
  return lp;
}

// Small coordinates keep every cofactor and dot product far inside int64.
bool fits_fast(const std::vector<Datum>& data, std::size_t d) {
  if (d > 4) return false;
  for (const auto& x : data)
    for (const auto& c : x.point)
      if (c > 4096 || c < -4096) return false;
  return true;
}

std::optional<LockPair> dispatch(const std::vector<Datum>& data, const std::vector<Datum>* must, std::size_t d) {
  if (d == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  for (const auto& x : data)
    if (x.point.size() != d) throw Error(Errc::DimMismatch, "datum dimension mismatch");
  if (fits_fast(data, d)) return search_impl<std::int64_t>(data, must, d);
  return search_impl<Int>(data, must, d);
}

std::string datum_list(const std::vector<Datum>& v) {
  std::string s;
  for (const auto& x : v) s += to_string(x);
  return s;
}

std::string points_list(const BasicSet& b) {
  std::string s;
  for (const auto& p : b) s += vec_to_string(p);
  return s;
}

}  // namespace

std::optional<LockPair> find_lock(const std::vector<Datum>& data, std::size_t d) {
  content(data);  // rejects inconsistent input
  return dispatch(data, nullptr, d);
}

std::optional<LockPair> find_lock_using(const std::vector<Datum>& data, const std::vector<Datum>& must,
                                        std::size_t d) {
  return dispatch(data, &must, d);
}

HsLearnerState hs_learner_initial(std::size_t d) {
  if (d == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  HsLearnerState s;
  s.dim = d;
  return s;
}

HsLearnerState hs_learner_step(const HsLearnerState& s, const Datum& datum) {
  if (datum.point.size() != s.dim) throw Error(Errc::DimMismatch, "datum dimension mismatch");
  if (s.locked) {
    const BasicSet& own = datum.label ? s.lock.cminus : s.lock.cplus;
    if (std::find(own.begin(), own.end(), datum.point) != own.end())
      throw Error(Errc::InconsistentDatum, "datum contradicts a lock point: " + to_string(datum));
    if (hs_member(s.lock.plus, datum.point) == (datum.label == 1)) return s;
    HsLearnerState o;
    o.dim = s.dim;
    for (const auto& p : s.lock.cplus) o.retained.push_back({p, 1});
    for (const auto& q : s.lock.cminus) o.retained.push_back({q, 0});
    o.retained.push_back(datum);
    std::sort(o.retained.begin(), o.retained.end());
    o.pending = datum;
    return o;
  }
  auto it = std::lower_bound(s.retained.begin(), s.retained.end(), Datum{datum.point, 0});
  for (; it != s.retained.end() && it->point == datum.point; ++it) {
    if (it->label == datum.label) return s;
    throw Error(Errc::InconsistentDatum, "datum contradicts retained data: " + to_string(datum));
  }
  HsLearnerState o;
  o.dim = s.dim;
  o.retained = s.retained;
  o.retained.insert(std::upper_bound(o.retained.begin(), o.retained.end(), datum), datum);
  std::vector<Datum> must{datum};
  if (s.pending) must.push_back(*s.pending);
  if (auto lock = find_lock_using(o.retained, must, s.dim)) {
    HsLearnerState l;
    l.dim = s.dim;
    l.locked = true;
    l.lock = std::move(*lock);
    return l;
  }
  return o;
}

Hypothesis hs_learner_hypothesis(std::shared_ptr<const HsLearnerState> s) {
  Hypothesis h;
  if (s->locked) {
    h.id = "lock:" + points_list(s->lock.cplus) + "|" + points_list(s->lock.cminus);
    h.semantics = Language::halfspace(s->lock.plus);
    h.mode = "locked";
    h.lock_dist_sq = min_parallel_distance_sq(s->lock.plus.normal);
  } else {
    std::string fp = datum_list(s->retained);
    if (s->pending) fp += "!" + to_string(*s->pending);
    h.id = "open:" + short_id(fp);
    IntVec up(s->dim, Int(0));
    up.back() = 1;
    h.semantics = Language::halfspace({up, Int(0)});
    h.mode = "open";
  }
  h.state = std::move(s);
  return h;
}

Hypothesis HsLearner::init() const {
  return hs_learner_hypothesis(std::make_shared<const HsLearnerState>(hs_learner_initial(d_)));
}

Hypothesis HsLearner::step(const Hypothesis& h, const Datum& d) const {
  const auto& s = state_as<HsLearnerState>(h);
  HsLearnerState next = hs_learner_step(s, d);
  if (next.locked == s.locked && next.retained.size() == s.retained.size() &&
      (s.locked ? next.lock.cplus == s.lock.cplus && next.lock.cminus == s.lock.cminus : true) &&
      next.pending == s.pending)
    return h;
  return hs_learner_hypothesis(std::make_shared<const HsLearnerState>(std::move(next)));
}

}  // namespace itinf
