#include "itinf/fourier_motzkin.hpp"

#include <set>
#include <string>

namespace itinf::fm {
namespace {

// Substitute x[k] := sum(sol.coef[i] x[i]) + sol.constant into c.
void substitute(Constraint& c, std::size_t k, const Constraint& sol) {
  Rat f = c.coef[k];
  if (f == 0) return;
  c.coef[k] = 0;
  for (std::size_t i = 0; i < c.coef.size(); ++i) c.coef[i] += f * sol.coef[i];
  c.constant += f * sol.constant;
}

bool all_zero(const Constraint& c) {
  for (const auto& v : c.coef)
    if (v != 0) return false;
  return true;
}

// Scale by a positive factor so the first nonzero coefficient has magnitude 1.
void normalize(Constraint& c) {
  for (const auto& v : c.coef) {
    if (v != 0) {
      Rat s = v < 0 ? Rat(-v) : v;
      for (auto& x : c.coef) x /= s;
      c.constant /= s;
      return;
    }
  }
}

std::string key(const Constraint& c) {
  std::string k;
  for (const auto& v : c.coef) k += rat_to_string(v) + ",";
  return k + "|" + rat_to_string(c.constant);
}

}  // namespace

bool feasible(std::size_t nvars, std::vector<Constraint> cs) {
  for (auto& c : cs) c.coef.resize(nvars, Rat(0));

  std::vector<Constraint> ineqs;
  std::vector<Constraint> eqs;
  for (auto& c : cs) (c.equality ? eqs : ineqs).push_back(std::move(c));

  while (!eqs.empty()) {
    Constraint e = std::move(eqs.back());
    eqs.pop_back();
    std::size_t k = nvars;
    for (std::size_t i = 0; i < nvars; ++i)
      if (e.coef[i] != 0) { k = i; break; }
    if (k == nvars) {
      if (e.constant != 0) return false;
      continue;
    }
    // x[k] = -(rest + constant) / coef[k]
    Constraint sol;
    sol.coef.assign(nvars, Rat(0));
    for (std::size_t i = 0; i < nvars; ++i)
      if (i != k) sol.coef[i] = -e.coef[i] / e.coef[k];
    sol.constant = -e.constant / e.coef[k];
    for (auto& c : eqs) substitute(c, k, sol);
    for (auto& c : ineqs) substitute(c, k, sol);
  }

  for (std::size_t var = 0; var < nvars; ++var) {
    std::vector<Constraint> pos, neg, rest;
    for (auto& c : ineqs) {
      if (c.coef[var] > 0) pos.push_back(std::move(c));
      else if (c.coef[var] < 0) neg.push_back(std::move(c));
      else rest.push_back(std::move(c));
    }
    std::set<std::string> seen;
    std::vector<Constraint> next;
    auto push = [&](Constraint c) {
      if (all_zero(c)) {
        if (c.constant < 0) return false;
        return true;
      }
      normalize(c);
      if (seen.insert(key(c)).second) next.push_back(std::move(c));
      return true;
    };
    for (auto& c : rest)
      if (!push(std::move(c))) return false;
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rat fp = -n.coef[var];
        Rat fn = p.coef[var];
        Constraint comb;
        comb.coef.resize(nvars);
        for (std::size_t i = 0; i < nvars; ++i) comb.coef[i] = fp * p.coef[i] + fn * n.coef[i];
        comb.coef[var] = 0;
        comb.constant = fp * p.constant + fn * n.constant;
        if (!push(std::move(comb))) return false;
      }
    }
    ineqs = std::move(next);
  }
  for (const auto& c : ineqs)
    if (c.constant < 0) return false;
  return true;
}

}  // namespace itinf::fm
