// Hypothesis semantics: the language a hypothesis denotes.
#pragma once

#include "itinf/json_util.hpp"
#include "itinf/lattice.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>

namespace itinf {

struct Language;

// (base ∪ pos) ∖ neg
struct Patched {
  std::shared_ptr<const Language> base;
  std::set<IntVec> pos;
  std::set<IntVec> neg;
};

// Member of a registered fixture family over the naturals.
struct FixtureLang {
  std::string family;
  Nat index;
};

struct Language {
  std::variant<HalfSpace, Patched, FixtureLang> node;

  static Language halfspace(HalfSpace h) { return {std::move(h)}; }
  static Language fixture(std::string family, Nat index) {
    return {FixtureLang{std::move(family), std::move(index)}};
  }
  static Language patched(Language base, std::set<IntVec> pos, std::set<IntVec> neg) {
    return {Patched{std::make_shared<const Language>(std::move(base)), std::move(pos), std::move(neg)}};
  }
};

bool member(const Language& l, const IntVec& p);

// A string that is equal for two languages exactly when the languages are
// equal; nullopt when no such canonical form is available.
std::optional<std::string> exact_key(const Language& l);
std::optional<bool> exact_subset(const Language& a, const Language& b);
std::optional<bool> exact_equal(const Language& a, const Language& b);

Json to_json(const Language& l);
Language language_from_json(const Json& j);

}  // namespace itinf
