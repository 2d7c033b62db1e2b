// Integer/natural codings: the zig-zag map, Cantor pairing, left-nested
// tuples and the half-space index space.
#pragma once

#include "itinf/lattice.hpp"
#include "itinf/num.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace itinf {

// 0->0, -1->1, 1->2, -2->3, 2->4, ...
Nat z_to_n(const Int& x);
Int n_to_z(const Nat& n);

// Cantor pairing: (i+j)(i+j+1)/2 + j.
Nat cantor_pair(const Nat& i, const Nat& j);
std::pair<Nat, Nat> cantor_unpair(const Nat& k);

// <x0,...,xn> = pair(<x0,...,x_{n-1}>, xn); a 1-tuple is its element, the empty tuple is 0.
Nat encode_tuple(const std::vector<Nat>& xs);
std::vector<Nat> decode_tuple(const Nat& k, std::size_t len);

// <<x1>,...,<xd>>
Nat encode_point(const IntVec& p);
IntVec decode_point(const Nat& k, std::size_t d);

// Index <<a0>,<a1>,...,<ad>> denotes { x : a0 >= sum(ai xi) }; nullopt when
// every slope is zero (the degenerate indices).
std::optional<HalfSpace> decode_halfspace(const Nat& index, std::size_t d);
Nat canonical_index(const HalfSpace& l);

inline constexpr const char* kPairingName = "cantor";

}  // namespace itinf
