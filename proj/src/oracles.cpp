#include "itinf/oracles.hpp"

#include "itinf/error.hpp"

#include <cstdlib>
#include <numeric>

namespace itinf {
namespace {

void check_box(std::size_t d, long B) {
  if (d == 0 || d > kOracleMaxDim) throw Error(Errc::BoundsExceeded, "oracle dimension out of range");
  if (B < 0 || B > kOracleMaxBox) throw Error(Errc::BoundsExceeded, "oracle box out of range");
}

long small(const Int& v) {
  if (abs(v) > Int(1000000000)) throw Error(Errc::BoundsExceeded, "oracle coefficient too large");
  return static_cast<long>(v);
}

// Calls f on every point of [-B, B]^d.
template <class F>
void each_point(std::size_t d, long B, F f) {
  std::vector<long> x(d, -B);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < d && x[k] == B) x[k++] = -B;
    if (k == d) return;
    ++x[k];
  }
}

// All k-subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      out.push_back(c);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      c[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

Rat gap_oracle(const IntVec& normal, long B) {
  check_box(normal.size(), B);
  std::vector<long> a;
  Int norm2 = 0;
  for (const auto& c : normal) {
    a.push_back(small(c));
    norm2 += c * c;
  }
  if (norm2 == 0) throw Error(Errc::ZeroVector, "zero normal");
  long best = 0;
  each_point(a.size(), B, [&](const std::vector<long>& x) {
    long v = std::labs(std::inner_product(a.begin(), a.end(), x.begin(), 0L));
    if (v > 0 && (best == 0 || v < best)) best = v;
  });
  if (best == 0) throw Error(Errc::BoundsExceeded, "box too small to see a gap");
  return Rat(Int(best) * best, norm2);
}

JdistResult jdist_oracle(const Hyperplane& h, std::size_t j, long B) {
  const std::size_t d = h.normal.size();
  check_box(d, B);
  if (j >= d) throw Error(Errc::DimMismatch, "axis out of range");
  if (denominator(h.offset) != 1) throw Error(Errc::NonIntegralOffset, "offset must be an integer");
  JdistResult res;
  if (h.normal[j] == 0) return res;
  std::vector<long> a;
  for (const auto& c : h.normal) a.push_back(small(c));
  const long c0 = small(numerator(h.offset));
  long best = 0;
  bool above = false, below = false;
  each_point(d, B, [&](const std::vector<long>& x) {
    long v = std::inner_product(a.begin(), a.end(), x.begin(), c0);
    long m = std::labs(v);
    if (m == 0) return;
    if (best == 0 || m < best) {
      best = m;
      above = below = false;
    }
    if (m == best) (v > 0 ? above : below) = true;
  });
  if (best == 0) throw Error(Errc::BoundsExceeded, "box too small");
  res.dist = Rat(best, std::labs(a[j]));
  res.above = above;
  res.below = below;
  return res;
}

std::optional<LockPair> lock_oracle(const std::vector<Datum>& data, std::size_t d) {
  if (d == 0 || d > kOracleMaxDim) throw Error(Errc::BoundsExceeded, "oracle dimension out of range");
  if (data.size() > kOracleMaxData) throw Error(Errc::BoundsExceeded, "too many data for the oracle");
  auto ps = pos(data), ns = neg(data);
  std::vector<IntVec> P(ps.begin(), ps.end()), N(ns.begin(), ns.end());
  std::optional<LockPair> best;
  for (const auto& ip : subsets(P.size(), d)) {
    BasicSet cp;
    for (auto i : ip) cp.push_back(P[i]);
    if (!affinely_independent(cp)) continue;
    Hyperplane hp = hyperplane_through(cp);
    for (const auto& in : subsets(N.size(), d)) {
      BasicSet cm;
      for (auto i : in) cm.push_back(N[i]);
      if (!affinely_independent(cm)) continue;
      Hyperplane hm = hyperplane_through(cm);
      if (hp.normal != hm.normal) continue;
      Rat gap = hp.offset - hm.offset;
      if (gap != 1 && gap != -1) continue;
      if (!facing_fm(cp, cm)) continue;
      // Orient so the negative basic set sits at level -1.
      const int sigma = (dot(hp.normal, cm[0]) + numerator(hp.offset)) > 0 ? -1 : 1;
      IntVec a = hp.normal;
      for (auto& x : a) x *= sigma;
      Int b = numerator(hp.offset) * sigma;
      bool ok = true;
      for (const auto& p : P) ok = ok && dot(a, p) + b >= 0;
      for (const auto& q : N) ok = ok && dot(a, q) + b <= -1;
      if (!ok) continue;
      if (best && std::tie(best->cplus, best->cminus) <= std::tie(cp, cm)) continue;
      IntVec na = a;
      for (auto& x : na) x = -x;
      best = LockPair{cp, cm, HalfSpace{a, b}, HalfSpace{na, Int(-b - 1)}};
    }
  }
  return best;
}

std::uint64_t primitive_count_within(std::size_t d, const Int& n) {
  if (n < 1) return 0;
  Int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  const long R = static_cast<long>(r);
  std::uint64_t count = 0;
  std::vector<long> x(d, -R);
  while (true) {
    long s = 0, g = 0;
    for (long c : x) {
      s += c * c;
      g = std::gcd(g, c);
    }
    if (g == 1 && Int(s) <= n) ++count;
    std::size_t k = 0;
    while (k < d && x[k] == R) x[k++] = -R;
    if (k == d) break;
    ++x[k];
  }
  return count;
}

}  // namespace itinf
