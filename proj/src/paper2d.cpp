#include "itinf/paper2d.hpp"

#include "itinf/codec.hpp"
#include "itinf/error.hpp"

#include <algorithm>

namespace itinf {
namespace {

// Primitive normal and integer offset of the line through p, q (p != q),
// sign-normalized.
std::pair<IntVec, Int> line_through(const IntVec& p, const IntVec& q) {
  Hyperplane h = hyperplane_through({p, q});
  return {h.normal, numerator(h.offset)};
}

bool overlap(Int a0, Int a1, Int b0, Int b1) {
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  return std::max(a0, b0) <= std::min(a1, b1);
}

const Nat kMaxStored = 1000000;

Nat stored_item(const IntVec& p, int label) { return cantor_pair(encode_point(p), Nat(label)); }

}  // namespace

bool lock_property_2d(const IntVec& u, const IntVec& v, const IntVec& x, const IntVec& y) {
  for (const auto* p : {&u, &v, &x, &y})
    if (p->size() != 2) throw Error(Errc::DimMismatch, "LOCK needs planar points");
  if (u == v || x == y) return false;
  auto [n1, o1] = line_through(u, v);
  auto [n2, o2] = line_through(x, y);
  if (n1 != n2) return false;
  Int gap = o1 - o2;
  if (gap != 1 && gap != -1) return false;
  // Matching first coordinates exist unless the lines are vertical, matching
  // second coordinates unless they are horizontal.
  if (n1[1] != 0 && !overlap(u[0], v[0], x[0], y[0])) return false;
  if (n1[0] != 0 && !overlap(u[1], v[1], x[1], y[1])) return false;
  return true;
}

HalfSpace lock_halfspace_2d(const IntVec& u, const IntVec& v, const IntVec& x) {
  auto [n, o] = line_through(u, v);
  if (dot(n, x) + o > 0) {
    for (auto& c : n) c = -c;
    o = -o;
  }
  return {n, o};
}

Decoded2D decode_2d(const Nat& code) {
  Decoded2D out;
  if (code % 2 == 1) {
    out.odd = true;
    auto parts = decode_tuple((code - 1) / 2, 4);
    std::array<IntVec, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = decode_point(parts[i], 2);
    if (lock_property_2d(pts[0], pts[1], pts[2], pts[3])) out.lock = pts;
    return out;
  }
  auto [s, w] = cantor_unpair(code / 2);
  if (s > kMaxStored) throw Error(Errc::MalformedCode, "stored-data length out of range");
  auto items = decode_tuple(w, static_cast<std::size_t>(s));
  for (const auto& it : items) {
    auto [pt, label] = cantor_unpair(it);
    if (label > 1) throw Error(Errc::MalformedCode, "stored label is not a bit");
    out.stored.push_back({decode_point(pt, 2), label == 1 ? 1 : 0});
  }
  return out;
}

HalfSpace semantics_2d(const Nat& code) {
  if (code % 2 == 1) {
    auto d = decode_2d(code);
    if (d.lock) return lock_halfspace_2d((*d.lock)[0], (*d.lock)[1], (*d.lock)[2]);
  }
  return {make_vec({0, 1}), Int(0)};
}

Nat learner_2d_step(const Nat& code, const Nat& coded_point, int label) {
  if (label != 0 && label != 1) throw Error(Errc::MalformedCode, "datum label is not a bit");
  const IntVec w = decode_point(coded_point, 2);
  Decoded2D dec = decode_2d(code);

  if (dec.odd) {
    if (!dec.lock) throw Error(Errc::MalformedCode, "odd code without the LOCK property");
    const auto& [u, v, x, y] = *dec.lock;
    HalfSpace h = lock_halfspace_2d(u, v, x);
    if (hs_member(h, w) == (label == 1)) return code;
    std::vector<Nat> items{stored_item(u, 1), stored_item(v, 1), stored_item(x, 0), stored_item(y, 0),
                           stored_item(w, label)};
    return 2 * cantor_pair(5, encode_tuple(items));
  }

  std::vector<Datum> all = dec.stored;
  all.push_back({w, label});
  std::vector<IntVec> P, N;
  for (const auto& d : all) (d.label ? P : N).push_back(d.point);
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());

  // Least (u, v, x, y) with u < v and x < y whose half-space also agrees with
  // every stored datum; without that check a stale lock could be re-entered forever.
  std::optional<std::array<IntVec, 4>> best;
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      auto [n, o] = line_through(P[i], P[j]);
      for (int sgn : {1, -1}) {
        IntVec a = n;
        Int b = o;
        if (sgn < 0) {
          for (auto& c : a) c = -c;
          b = -b;
        }
        HalfSpace h{a, b};
        bool ok = true;
        for (const auto& d : all)
          if (hs_member(h, d.point) != (d.label == 1)) { ok = false; break; }
        if (!ok) continue;
        std::vector<const IntVec*> cand;
        for (const auto& q : N)
          if (dot(a, q) + b == -1) cand.push_back(&q);
        for (std::size_t k = 0; k < cand.size(); ++k) {
          for (std::size_t l = k + 1; l < cand.size(); ++l) {
            if (!lock_property_2d(P[i], P[j], *cand[k], *cand[l])) continue;
            std::array<IntVec, 4> c{P[i], P[j], *cand[k], *cand[l]};
            if (!best || c < *best) best = c;
          }
        }
      }
    }
  }
  if (best) {
    std::vector<Nat> pts;
    for (const auto& p : *best) pts.push_back(encode_point(p));
    return 2 * encode_tuple(pts) + 1;
  }
  auto [s, wt] = cantor_unpair(code / 2);
  Nat item = stored_item(w, label);
  Nat tuple = s == 0 ? item : cantor_pair(wt, item);
  return 2 * cantor_pair(s + 1, tuple);
}

Hypothesis paper2d_hypothesis(const Nat& code) {
  Hypothesis h;
  h.id = "p2d:" + short_id(code.str());
  const bool locked = code % 2 == 1 && decode_2d(code).lock.has_value();
  HalfSpace sem = semantics_2d(code);
  h.semantics = Language::halfspace(sem);
  h.mode = code % 2 == 0 ? "collect" : (locked ? "locked" : "invalid");
  if (locked) h.lock_dist_sq = min_parallel_distance_sq(sem.normal);
  auto st = std::make_shared<Paper2DState>();
  st->code = code;
  h.state = std::move(st);
  return h;
}

Hypothesis Paper2DLearner::step(const Hypothesis& h, const Datum& d) const {
  if (d.point.size() != 2) throw Error(Errc::DimMismatch, "paper2d learner needs planar data");
  const Nat& code = state_as<Paper2DState>(h).code;
  Nat next = learner_2d_step(code, encode_point(d.point), d.label);
  if (next == code) return h;
  return paper2d_hypothesis(next);
}

}  // namespace itinf
