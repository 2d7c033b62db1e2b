#include "itinf/fixtures.hpp"

#include "itinf/codec.hpp"
#include "itinf/error.hpp"

#include <map>
#include <memory>

namespace itinf {

bool HalfSpaceFamily::degenerate(const Nat& i) const { return !decode_halfspace(i, d_).has_value(); }

bool HalfSpaceFamily::member(const Nat& index, const IntVec& p) const {
  auto h = decode_halfspace(index, d_);
  return h && hs_member(*h, p);
}

Language HalfSpaceFamily::language(const Nat& index) const {
  auto h = decode_halfspace(index, d_);
  if (!h) throw Error(Errc::InvalidSpec, "degenerate half-space index");
  return Language::halfspace(*h);
}

bool in_set_bits(const Nat& mask, const Nat& n) {
  if (mask == 0 || n > Nat(boost::multiprecision::msb(mask))) return false;
  return boost::multiprecision::bit_test(mask, static_cast<unsigned>(n));
}

Nat set_mask(const std::set<Nat>& s) {
  Nat m = 0;
  for (const auto& x : s) boost::multiprecision::bit_set(m, static_cast<unsigned>(x));
  return m;
}

IntVec nat_point(const Nat& n) { return IntVec{to_int(n)}; }

std::optional<Nat> point_nat(const IntVec& p) {
  if (p.size() != 1 || p[0] < 0) return std::nullopt;
  return to_nat(p[0]);
}

namespace {

class NatFamily : public IndexedFamily {
 public:
  std::size_t dim() const override { return 1; }
  bool member(const Nat& index, const IntVec& p) const override {
    auto n = point_nat(p);
    return n && contains(index, *n);
  }
  Language language(const Nat& index) const override { return Language::fixture(name(), index); }

 protected:
  virtual bool contains(const Nat& index, const Nat& n) const = 0;
};

class FinFamily : public NatFamily {
 public:
  std::string name() const override { return "fin"; }

 protected:
  bool contains(const Nat& i, const Nat& n) const override {
    return i == 0 || in_set_bits(i - 1, n);
  }

 public:
  std::optional<std::string> key(const Nat& i) const override {
    return i == 0 ? "cofin:0" : "fin:" + Nat(i - 1).str();
  }
};

class CoFinFamily : public NatFamily {
 public:
  std::string name() const override { return "cofin"; }

 protected:
  bool contains(const Nat& i, const Nat& n) const override { return !in_set_bits(i, n); }

 public:
  std::optional<std::string> key(const Nat& i) const override { return "cofin:" + i.str(); }
};

class CoSingletonFamily : public NatFamily {
 public:
  std::string name() const override { return "cosingleton"; }

 protected:
  bool contains(const Nat& i, const Nat& n) const override { return i == 0 || n != i - 1; }

 public:
  std::optional<std::string> key(const Nat& i) const override {
    if (i == 0) return "cofin:0";
    Nat m = 0;
    boost::multiprecision::bit_set(m, static_cast<unsigned>(i - 1));
    return "cofin:" + m.str();
  }
};

class LkFamily : public NatFamily {
 public:
  std::string name() const override { return "lk"; }

 protected:
  bool contains(const Nat& i, const Nat& n) const override {
    bool even = n % 2 == 0;
    if (i == 0) return even;
    Nat k = (i - 1) / 2;
    bool primed = i % 2 == 0;
    if (n == 2 * k + 1) return true;
    if (primed && n == 2 * k) return false;
    return even;
  }

 public:
  // Each member is infinite and coinfinite and the members differ pairwise.
  std::optional<std::string> key(const Nat& i) const override { return "lk:" + i.str(); }
};

class LsdFamily : public NatFamily {
 public:
  std::string name() const override { return "lsd"; }

 protected:
  bool contains(const Nat& i, const Nat& n) const override {
    auto [smask, dmask] = cantor_unpair(i);
    auto [x, y] = cantor_unpair(n);
    if (in_set_bits(smask, x)) return y == 0 || in_set_bits(dmask, y - 1);
    return y != 0;
  }

 public:
  // S is the set of rows holding 0 and D is read off any such row, so only an
  // empty S leaves D free. No member is finite, cofinite or contains all evens.
  std::optional<std::string> key(const Nat& i) const override {
    auto [smask, dmask] = cantor_unpair(i);
    return "lsd:" + smask.str() + ":" + (smask == 0 ? std::string("0") : dmask.str());
  }
};

const std::map<std::string, std::unique_ptr<IndexedFamily>>& registry() {
  static const auto reg = [] {
    std::map<std::string, std::unique_ptr<IndexedFamily>> m;
    m["fin"] = std::make_unique<FinFamily>();
    m["cofin"] = std::make_unique<CoFinFamily>();
    m["cosingleton"] = std::make_unique<CoSingletonFamily>();
    m["lk"] = std::make_unique<LkFamily>();
    m["lsd"] = std::make_unique<LsdFamily>();
    return m;
  }();
  return reg;
}

}  // namespace

const IndexedFamily& fixture_family(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw Error(Errc::InvalidSpec, "unknown fixture family: " + name);
  return *it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

Nat fin_index(const std::set<Nat>& d) { return set_mask(d) + 1; }
Nat cofin_index(const std::set<Nat>& d) { return set_mask(d); }
Nat cosingleton_index(const Nat& x) { return x + 1; }
Nat lk_index(const Nat& k, bool primed) { return 2 * k + (primed ? 2 : 1); }

Nat lsd_index(const std::set<Nat>& s, const std::set<Nat>& d) {
  std::set<Nat> shifted;
  for (const auto& x : d) {
    if (x == 0) throw Error(Errc::InvalidSpec, "D must avoid 0");
    shifted.insert(x - 1);
  }
  return cantor_pair(set_mask(s), set_mask(shifted));
}

}  // namespace itinf
