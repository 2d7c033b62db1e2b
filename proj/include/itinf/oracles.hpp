// Exhaustive reference computations for tests. Desk-scale bounds only.
#pragma once

#include "itinf/hs_learner.hpp"
#include "itinf/lattice.hpp"

#include <optional>

namespace itinf {

inline constexpr long kOracleMaxBox = 20;
inline constexpr std::size_t kOracleMaxData = 12;
inline constexpr std::size_t kOracleMaxDim = 3;

// Squared distance from the least positive |a·x| over the box [-B, B]^d.
Rat gap_oracle(const IntVec& normal, long B);

struct JdistResult {
  std::optional<Rat> dist;  // nullopt when a_j = 0
  bool above = false;       // a point at that distance with a·x + c > 0
  bool below = false;       // and one with a·x + c < 0
};

// Least positive distance along axis j (0-based) from a box point to the plane.
JdistResult jdist_oracle(const Hyperplane& h, std::size_t j, long B);

// Tries every pair of d-subsets; the same least-candidate order as find_lock.
std::optional<LockPair> lock_oracle(const std::vector<Datum>& data, std::size_t d);

// |{primitive a in Z^d : a·a <= n}|, the bound on the number of locks when n
// is the squared norm of the target normal.
std::uint64_t primitive_count_within(std::size_t d, const Int& n);

}  // namespace itinf
