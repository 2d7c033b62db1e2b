#include "itinf/num.hpp"

#include "itinf/error.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace itinf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AllSlopesZero: return "AllSlopesZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::AffinelyDependent: return "AffinelyDependent";
    case Errc::NonIntegralOffset: return "NonIntegralOffset";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InconsistentDatum: return "InconsistentDatum";
    case Errc::MalformedCode: return "MalformedCode";
    case Errc::UnderlyingLearnerUndefined: return "UnderlyingLearnerUndefined";
    case Errc::AdapterInsufficient: return "AdapterInsufficient";
    case Errc::BoundsExceeded: return "BoundsExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int floor_rat(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd_int(a, b) * abs(b);
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

Nat to_nat(const Int& v) { return Nat(v.str()); }
Int to_int(const Nat& v) { return Int(v.str()); }

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Int> parse_int(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  std::string digits(s.substr(i));
  Int v(digits);
  if (s[0] == '-') v = -v;
  return v;
}

std::optional<Rat> parse_rat(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(s.substr(0, slash));
  std::string_view ds = s.substr(slash + 1);
  if (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) return std::nullopt;
  auto d = parse_int(ds);
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

IntVec make_vec(std::initializer_list<long long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

bool fits_int64(const Int& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string short_id(const std::string& s, std::size_t max_len) {
  if (s.size() <= max_len) return s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(fnv1a64(s)),
                static_cast<unsigned long long>(fnv1a64(s, 0x84222325cbf29ce4ULL)));
  return "#" + std::to_string(s.size()) + ":" + buf;
}

}  // namespace itinf
