#include "itinf/codec.hpp"

#include "itinf/error.hpp"

namespace itinf {

Nat z_to_n(const Int& x) {
  if (x >= 0) return to_nat(x) * 2;
  return to_nat(-x) * 2 - 1;
}

Int n_to_z(const Nat& n) {
  if (n % 2 == 0) return to_int(n / 2);
  return -to_int((n + 1) / 2);
}

Nat cantor_pair(const Nat& i, const Nat& j) {
  Nat s = i + j;
  return s * (s + 1) / 2 + j;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& k) {
  Nat disc = k * 8 + 1;
  Nat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat j = k - t;
  return {w - j, j};
}

Nat encode_tuple(const std::vector<Nat>& xs) {
  if (xs.empty()) return 0;
  Nat acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = cantor_pair(acc, xs[i]);
  return acc;
}

std::vector<Nat> decode_tuple(const Nat& k, std::size_t len) {
  std::vector<Nat> out(len);
  if (len == 0) return out;
  Nat acc = k;
  for (std::size_t i = len - 1; i > 0; --i) {
    auto [head, last] = cantor_unpair(acc);
    out[i] = std::move(last);
    acc = std::move(head);
  }
  out[0] = std::move(acc);
  return out;
}

Nat encode_point(const IntVec& p) {
  std::vector<Nat> xs;
  xs.reserve(p.size());
  for (const auto& c : p) xs.push_back(z_to_n(c));
  return encode_tuple(xs);
}

IntVec decode_point(const Nat& k, std::size_t d) {
  IntVec p;
  p.reserve(d);
  for (const auto& n : decode_tuple(k, d)) p.push_back(n_to_z(n));
  return p;
}

std::optional<HalfSpace> decode_halfspace(const Nat& index, std::size_t d) {
  if (d == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  auto parts = decode_tuple(index, d + 1);
  Int a0 = n_to_z(parts[0]);
  IntVec normal;
  for (std::size_t i = 1; i <= d; ++i) normal.push_back(-n_to_z(parts[i]));
  Int g = gcd_vec(normal);
  if (g == 0) return std::nullopt;
  for (auto& x : normal) x /= g;
  return HalfSpace{normal, floor_div(a0, g)};
}

Nat canonical_index(const HalfSpace& l) {
  std::vector<Nat> xs;
  xs.push_back(z_to_n(l.offset));
  for (const auto& a : l.normal) xs.push_back(z_to_n(-a));
  return encode_tuple(xs);
}

}  // namespace itinf
