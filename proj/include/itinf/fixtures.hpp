// Indexed families with uniformly decidable membership: the half-space index
// space and the small separating classes over the naturals used as fixtures.
#pragma once

#include "itinf/language.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace itinf {

class IndexedFamily {
 public:
  virtual ~IndexedFamily() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  // Indices that name no member of the class (skipped by enumeration).
  virtual bool degenerate(const Nat&) const { return false; }
  virtual bool member(const Nat& index, const IntVec& p) const = 0;
  virtual Language language(const Nat& index) const = 0;
  // Equal for two indices (of any fixture family) exactly when they name the
  // same set; nullopt when the family has no such normal form.
  virtual std::optional<std::string> key(const Nat&) const { return std::nullopt; }
};

class HalfSpaceFamily : public IndexedFamily {
 public:
  explicit HalfSpaceFamily(std::size_t d) : d_(d) {}
  std::string name() const override { return "halfspace"; }
  std::size_t dim() const override { return d_; }
  bool degenerate(const Nat& i) const override;
  bool member(const Nat& index, const IntVec& p) const override;
  Language language(const Nat& index) const override;

 private:
  std::size_t d_;
};

// Fixture families over the naturals; a natural n is the point (n).
//   fin          0 -> N, k+1 -> D_k (the set bits of k)
//   cofin        k -> N \ D_k
//   cosingleton  0 -> N, x+1 -> N \ {x}
//   lk           0 -> 2N, 2k+1 -> L_k = 2N ∪ {2k+1}, 2k+2 -> L_k \ {2k}
//   lsd          pair(S, D) -> S×(D∪{0}) ∪ (N\S)×(N\{0}) on Cantor-coded pairs,
//                S the bits of the first mask, D = { i+1 : bit i of the second }
const IndexedFamily& fixture_family(const std::string& name);
std::vector<std::string> fixture_names();

bool in_set_bits(const Nat& mask, const Nat& n);
Nat set_mask(const std::set<Nat>& s);

Nat fin_index(const std::set<Nat>& d);
Nat cofin_index(const std::set<Nat>& d);
Nat cosingleton_index(const Nat& x);
Nat lk_index(const Nat& k, bool primed);
Nat lsd_index(const std::set<Nat>& s, const std::set<Nat>& d);

IntVec nat_point(const Nat& n);
// nullopt when p is not a one-dimensional natural.
std::optional<Nat> point_nat(const IntVec& p);

}  // namespace itinf
