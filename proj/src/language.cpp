#include "itinf/language.hpp"

#include "itinf/error.hpp"
#include "itinf/fixtures.hpp"

namespace itinf {

Json int_to_json(const Int& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

Json nat_to_json(const Nat& v) { return int_to_json(to_int(v)); }

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    auto v = parse_int(j.get<std::string>());
    if (v) return *v;
  }
  throw Error(Errc::ParseError, "expected an integer, got " + j.dump());
}

Nat json_to_nat(const Json& j) {
  Int v = json_to_int(j);
  if (v < 0) throw Error(Errc::ParseError, "expected a natural, got " + j.dump());
  return to_nat(v);
}

IntVec json_to_vec(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an integer array");
  IntVec v;
  for (const auto& x : j) v.push_back(json_to_int(x));
  return v;
}

namespace {

const HalfSpace* as_halfspace(const Language& l) { return std::get_if<HalfSpace>(&l.node); }

// Patched language over a half-space base in dimension >= 2, in the form
// where pos avoids the base and neg lies inside it. Finite patches cannot
// hide the infinite difference between two distinct such bases.
struct Canonical {
  HalfSpace base;
  std::set<IntVec> pos, neg;
};

std::optional<Canonical> canonical(const Language& l) {
  if (const auto* h = as_halfspace(l)) return Canonical{*h, {}, {}};
  const auto* p = std::get_if<Patched>(&l.node);
  if (!p) return std::nullopt;
  auto inner = canonical(*p->base);
  if (!inner || inner->base.normal.size() < 2) return std::nullopt;
  Canonical c{inner->base, {}, {}};
  // Apply the inner patch first, then this one.
  auto in_inner = [&](const IntVec& x) {
    if (inner->pos.count(x)) return true;
    if (inner->neg.count(x)) return false;
    return hs_member(inner->base, x);
  };
  std::set<IntVec> touched = inner->pos;
  touched.insert(inner->neg.begin(), inner->neg.end());
  touched.insert(p->pos.begin(), p->pos.end());
  touched.insert(p->neg.begin(), p->neg.end());
  for (const auto& x : touched) {
    bool in = p->neg.count(x) ? false : (p->pos.count(x) ? true : in_inner(x));
    bool in_base = hs_member(c.base, x);
    if (in && !in_base) c.pos.insert(x);
    if (!in && in_base) c.neg.insert(x);
  }
  return c;
}

bool canonical_member(const Canonical& c, const IntVec& x) {
  if (c.pos.count(x)) return true;
  if (c.neg.count(x)) return false;
  return hs_member(c.base, x);
}

std::string points_key(const std::set<IntVec>& s) {
  std::string k;
  for (const auto& p : s) k += vec_to_string(p);
  return k;
}

}  // namespace

bool member(const Language& l, const IntVec& p) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return p.size() == n.normal.size() && hs_member(n, p);
        } else if constexpr (std::is_same_v<T, Patched>) {
          if (n.neg.count(p)) return false;
          if (n.pos.count(p)) return true;
          return member(*n.base, p);
        } else {
          return fixture_family(n.family).member(n.index, p);
        }
      },
      l.node);
}

std::optional<std::string> exact_key(const Language& l) {
  if (const auto* f = std::get_if<FixtureLang>(&l.node)) {
    auto k = fixture_family(f->family).key(f->index);
    if (!k) return std::nullopt;
    return "fx:" + *k;
  }
  if (const auto* h = as_halfspace(l)) return "hs:" + to_string(*h);
  auto c = canonical(l);
  if (!c) return std::nullopt;
  if (c->pos.empty() && c->neg.empty()) return "hs:" + to_string(c->base);
  return "pt:" + to_string(c->base) + "+" + points_key(c->pos) + "-" + points_key(c->neg);
}

std::optional<bool> exact_subset(const Language& a, const Language& b) {
  const auto* ha = as_halfspace(a);
  const auto* hb = as_halfspace(b);
  if (ha && hb) return ha->normal.size() == hb->normal.size() && hs_subset(*ha, *hb);
  auto ca = canonical(a);
  auto cb = canonical(b);
  if (!ca || !cb) return std::nullopt;
  if (ca->base.normal.size() != cb->base.normal.size()) return false;
  if (!hs_subset(ca->base, cb->base)) return false;
  for (const auto& p : ca->pos)
    if (!canonical_member(*cb, p)) return false;
  for (const auto& q : cb->neg)
    if (canonical_member(*ca, q)) return false;
  return true;
}

std::optional<bool> exact_equal(const Language& a, const Language& b) {
  auto ka = exact_key(a);
  auto kb = exact_key(b);
  // Fixture keys and geometric keys live on different ground sets and are
  // only compared within their own kind.
  if (ka && kb && (ka->rfind("fx:", 0) == 0) == (kb->rfind("fx:", 0) == 0)) return *ka == *kb;
  auto s1 = exact_subset(a, b);
  auto s2 = exact_subset(b, a);
  if (s1 && s2) return *s1 && *s2;
  return std::nullopt;
}

Json to_json(const Language& l) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        Json j;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          j["kind"] = "halfspace";
          j["normal"] = vec_to_json(n.normal);
          j["offset"] = int_to_json(n.offset);
        } else if constexpr (std::is_same_v<T, Patched>) {
          j["kind"] = "patched";
          j["base"] = to_json(*n.base);
          Json ps = Json::array(), ns = Json::array();
          for (const auto& p : n.pos) ps.push_back(vec_to_json(p));
          for (const auto& q : n.neg) ns.push_back(vec_to_json(q));
          j["pos"] = ps;
          j["neg"] = ns;
        } else {
          j["kind"] = "fixture";
          j["family"] = n.family;
          j["index"] = nat_to_json(n.index);
        }
        return j;
      },
      l.node);
}

Language language_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error(Errc::ParseError, "semantics needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "halfspace") {
    HalfSpace h{json_to_vec(j.at("normal")), json_to_int(j.at("offset"))};
    if (!is_primitive(h.normal)) throw Error(Errc::ParseError, "half-space normal must be primitive");
    return Language::halfspace(std::move(h));
  }
  if (kind == "patched") {
    std::set<IntVec> ps, ns;
    for (const auto& p : j.at("pos")) ps.insert(json_to_vec(p));
    for (const auto& q : j.at("neg")) ns.insert(json_to_vec(q));
    return Language::patched(language_from_json(j.at("base")), std::move(ps), std::move(ns));
  }
  if (kind == "fixture") {
    std::string fam = j.at("family").get<std::string>();
    fixture_family(fam);  // validates the name
    return Language::fixture(fam, json_to_nat(j.at("index")));
  }
  throw Error(Errc::ParseError, "unknown semantics kind: " + kind);
}

}  // namespace itinf
