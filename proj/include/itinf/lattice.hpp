// Exact lattice geometry: reduced forms, distances, tangents, basic sets.
#pragma once

#include "itinf/num.hpp"

#include <optional>
#include <string>
#include <vector>

namespace itinf {

// sum(normal[i] * x[i]) + offset = 0, normal primitive with first nonzero entry positive.
struct Hyperplane {
  IntVec normal;
  Rat offset;
  bool operator==(const Hyperplane&) const = default;
};

// { x : normal·x + offset >= 0 }, normal primitive and oriented toward the inside.
struct HalfSpace {
  IntVec normal;
  Int offset;
  bool operator==(const HalfSpace&) const = default;
  auto operator<=>(const HalfSpace&) const = default;
};

// d affinely independent lattice points in dimension d.
using BasicSet = std::vector<IntVec>;

struct TangentPair {
  HalfSpace plus;
  HalfSpace minus;
};

Int gcd_vec(const IntVec& v);
bool is_primitive(const IntVec& v);
// y with sum(v[i] * y[i]) == gcd_vec(v).
IntVec bezout_vec(const IntVec& v);

Hyperplane reduce_hyperplane(const std::vector<Rat>& slopes, const Rat& displacement);
// Same scaling as reduce_hyperplane but keeps the orientation of the inequality
// sum(slopes[i] x[i]) + displacement >= 0.
HalfSpace halfspace_from_rational(const std::vector<Rat>& slopes, const Rat& displacement);

// Fraction-free determinant of a square integer matrix.
Int determinant(std::vector<IntVec> m);

bool affinely_independent(const BasicSet& b);
Hyperplane hyperplane_through(const BasicSet& b);

// 1/|a_j| for a 0-based axis j, nullopt when a_j = 0.
std::optional<Rat> min_j_distance(const Hyperplane& h, std::size_t j);
// Squared distance between closest distinct lattice hyperplanes with this normal.
Rat min_parallel_distance_sq(const IntVec& normal);

TangentPair tangents(const Hyperplane& h);

bool facing(const BasicSet& b1, const BasicSet& b2);
// Decides facing by Fourier–Motzkin elimination in any dimension; facing()
// uses an interval test instead when d = 2.
bool facing_fm(const BasicSet& b1, const BasicSet& b2);
bool adjacent(const BasicSet& b1, const BasicSet& b2);

bool hs_member(const HalfSpace& l, const IntVec& p);
bool hs_equal(const HalfSpace& a, const HalfSpace& b);
bool hs_subset(const HalfSpace& a, const HalfSpace& b);

// Hyperplane.normal sign convention: first nonzero coordinate positive.
bool sign_normalized(const IntVec& v);
std::string to_string(const HalfSpace& h);
std::string to_string(const Hyperplane& h);

}  // namespace itinf
