// Exact number types shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itinf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
// Codes of the 2D learner grow doubly exponentially in the stored-data count,
// so naturals use GMP for fast big multiplication and square roots.
using Nat = boost::multiprecision::mpz_int;

using IntVec = std::vector<Int>;

Int floor_div(const Int& a, const Int& b);
Int floor_rat(const Rat& r);
Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);
Int dot(const IntVec& a, const IntVec& b);

Nat to_nat(const Int& v);
Int to_int(const Nat& v);

// "p/q", or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);
// Accepts "p" or "p/q" with optional sign; anything else (including decimals) is rejected.
std::optional<Rat> parse_rat(std::string_view s);
std::optional<Int> parse_int(std::string_view s);

std::string vec_to_string(const IntVec& v);  // "(1,-2,3)"
IntVec make_vec(std::initializer_list<long long> xs);

bool fits_int64(const Int& v);

// Stable 64-bit FNV-1a digest, used to shorten long hypothesis identities.
std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 1469598103934665603ULL);
// Returns s itself when short, otherwise "#<len>:<hex digest>".
std::string short_id(const std::string& s, std::size_t max_len = 64);

}  // namespace itinf
