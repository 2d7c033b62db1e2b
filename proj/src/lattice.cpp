#include "itinf/lattice.hpp"

#include "itinf/error.hpp"
#include "itinf/fourier_motzkin.hpp"

#include <algorithm>

namespace itinf {
namespace {

void require_dim(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimMismatch, "dimension mismatch");
}

// Returns (s, t, g) with s*a + t*b == g.
void ext_gcd(const Int& a, const Int& b, Int& s, Int& t, Int& g) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  s = s0; t = t0; g = r0;
}

void check_basic_set(const BasicSet& b) {
  if (b.empty()) throw Error(Errc::AffinelyDependent, "empty basic set");
  const std::size_t d = b[0].size();
  if (b.size() != d) throw Error(Errc::DimMismatch, "basic set needs exactly d points");
  for (const auto& p : b)
    if (p.size() != d) throw Error(Errc::DimMismatch, "basic set points differ in dimension");
}

// Cofactor normal of the hyperplane through the points; zero when dependent.
IntVec raw_normal(const BasicSet& b) {
  const std::size_t d = b[0].size();
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < d; ++i) {
    IntVec r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = b[i][k] - b[0][k];
    rows.push_back(std::move(r));
  }
  IntVec n(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<IntVec> minor;
    for (const auto& r : rows) {
      IntVec m;
      for (std::size_t c = 0; c < d; ++c)
        if (c != k) m.push_back(r[c]);
      minor.push_back(std::move(m));
    }
    Int det = determinant(std::move(minor));
    n[k] = (k % 2 == 0) ? det : Int(-det);
  }
  return n;
}

}  // namespace

Int gcd_vec(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  return g;
}

bool is_primitive(const IntVec& v) { return gcd_vec(v) == 1; }

bool sign_normalized(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

IntVec bezout_vec(const IntVec& v) {
  if (gcd_vec(v) == 0) throw Error(Errc::ZeroVector, "bezout of zero vector");
  IntVec y(v.size(), Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int s, t, ng;
    ext_gcd(g, v[i], s, t, ng);
    for (std::size_t k = 0; k < i; ++k) y[k] *= s;
    y[i] = t;
    g = ng;
  }
  if (g < 0)
    for (auto& x : y) x = -x;
  return y;
}

namespace {

// Integer normal and rational offset after clearing slope denominators.
std::pair<IntVec, Rat> clear_denominators(const std::vector<Rat>& slopes, const Rat& displacement) {
  Int l = 1;
  bool any = false;
  for (const auto& r : slopes) {
    l = lcm_int(l, denominator(r));
    if (r != 0) any = true;
  }
  if (!any) throw Error(Errc::AllSlopesZero, "target slopes all zero");
  IntVec a;
  for (const auto& r : slopes) a.push_back(numerator(r) * (l / denominator(r)));
  Int g = gcd_vec(a);
  for (auto& x : a) x /= g;
  return {a, displacement * Rat(l) / Rat(g)};
}

}  // namespace

Hyperplane reduce_hyperplane(const std::vector<Rat>& slopes, const Rat& displacement) {
  auto [a, off] = clear_denominators(slopes, displacement);
  if (!sign_normalized(a)) {
    for (auto& x : a) x = -x;
    off = -off;
  }
  return {a, off};
}

HalfSpace halfspace_from_rational(const std::vector<Rat>& slopes, const Rat& displacement) {
  auto [a, off] = clear_denominators(slopes, displacement);
  return {a, floor_rat(off)};
}

Int determinant(std::vector<IntVec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool affinely_independent(const BasicSet& b) {
  check_basic_set(b);
  for (const auto& x : raw_normal(b))
    if (x != 0) return true;
  return false;
}

Hyperplane hyperplane_through(const BasicSet& b) {
  check_basic_set(b);
  IntVec n = raw_normal(b);
  Int g = gcd_vec(n);
  if (g == 0) throw Error(Errc::AffinelyDependent, "basic set is affinely dependent");
  for (auto& x : n) x /= g;
  if (!sign_normalized(n))
    for (auto& x : n) x = -x;
  Rat off(-dot(n, b[0]));
  return {n, off};
}

std::optional<Rat> min_j_distance(const Hyperplane& h, std::size_t j) {
  if (denominator(h.offset) != 1)
    throw Error(Errc::NonIntegralOffset, "hyperplane misses the lattice");
  if (j >= h.normal.size()) throw Error(Errc::DimMismatch, "axis out of range");
  if (h.normal[j] == 0) return std::nullopt;
  return Rat(Int(1), abs(h.normal[j]));
}

Rat min_parallel_distance_sq(const IntVec& normal) {
  if (!is_primitive(normal)) throw Error(Errc::NotPrimitive, "normal is not primitive");
  return Rat(Int(1), dot(normal, normal));
}

TangentPair tangents(const Hyperplane& h) {
  Int f = floor_rat(h.offset);
  IntVec neg = h.normal;
  for (auto& x : neg) x = -x;
  return {{h.normal, f}, {neg, Int(-f - 1)}};
}

bool facing_fm(const BasicSet& b1, const BasicSet& b2) {
  Hyperplane h1 = hyperplane_through(b1);
  Hyperplane h2 = hyperplane_through(b2);
  if (h1.normal != h2.normal) return false;
  const std::size_t d = h1.normal.size();
  const IntVec& a = h1.normal;
  const std::size_t nv = 2 * d;  // lambda_0..lambda_{d-1}, mu_0..mu_{d-1}
  std::vector<fm::Constraint> cs;
  for (std::size_t k = 0; k < nv; ++k) {
    fm::Constraint c;
    c.coef.assign(nv, Rat(0));
    c.coef[k] = 1;
    cs.push_back(std::move(c));
  }
  for (int side = 0; side < 2; ++side) {
    fm::Constraint c;
    c.coef.assign(nv, Rat(0));
    for (std::size_t k = 0; k < d; ++k) c.coef[side * d + k] = 1;
    c.constant = -1;
    c.equality = true;
    cs.push_back(std::move(c));
  }
  // p - q parallel to a: (p-q)_i a_j - (p-q)_j a_i = 0 for all i < j.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      fm::Constraint c;
      c.coef.assign(nv, Rat(0));
      for (std::size_t k = 0; k < d; ++k) {
        c.coef[k] = Rat(b1[k][i] * a[j] - b1[k][j] * a[i]);
        c.coef[d + k] = Rat(-(b2[k][i] * a[j] - b2[k][j] * a[i]));
      }
      c.equality = true;
      cs.push_back(std::move(c));
    }
  }
  return fm::feasible(nv, std::move(cs));
}

bool facing(const BasicSet& b1, const BasicSet& b2) {
  Hyperplane h1 = hyperplane_through(b1);
  Hyperplane h2 = hyperplane_through(b2);
  if (h1.normal.size() != h2.normal.size()) throw Error(Errc::DimMismatch, "dimension mismatch");
  if (h1.normal != h2.normal) return false;
  const std::size_t d = h1.normal.size();
  if (d == 1) return true;
  if (d == 2) {
    const IntVec t{-h1.normal[1], h1.normal[0]};
    Int lo1 = dot(t, b1[0]), hi1 = dot(t, b1[1]);
    Int lo2 = dot(t, b2[0]), hi2 = dot(t, b2[1]);
    if (lo1 > hi1) std::swap(lo1, hi1);
    if (lo2 > hi2) std::swap(lo2, hi2);
    return std::max(lo1, lo2) <= std::min(hi1, hi2);
  }
  return facing_fm(b1, b2);
}

bool adjacent(const BasicSet& b1, const BasicSet& b2) {
  if (!facing(b1, b2)) return false;
  Hyperplane h1 = hyperplane_through(b1);
  Hyperplane h2 = hyperplane_through(b2);
  Rat gap = h1.offset - h2.offset;
  return gap == 1 || gap == -1;
}

bool hs_member(const HalfSpace& l, const IntVec& p) {
  require_dim(l.normal, p);
  return dot(l.normal, p) + l.offset >= 0;
}

bool hs_equal(const HalfSpace& a, const HalfSpace& b) {
  require_dim(a.normal, b.normal);
  return a == b;
}

bool hs_subset(const HalfSpace& a, const HalfSpace& b) {
  require_dim(a.normal, b.normal);
  return a.normal == b.normal && a.offset <= b.offset;
}

std::string to_string(const HalfSpace& h) {
  return vec_to_string(h.normal) + "·x + " + h.offset.str() + " >= 0";
}

std::string to_string(const Hyperplane& h) {
  return vec_to_string(h.normal) + "·x + " + rat_to_string(h.offset) + " = 0";
}

}  // namespace itinf
