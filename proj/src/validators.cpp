#include "itinf/validators.hpp"

#include "itinf/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace itinf {

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::Conv: return "conv";
    case Restriction::Dec: return "dec";
    case Restriction::Caut: return "caut";
    case Restriction::WMon: return "wmon";
    case Restriction::Mon: return "mon";
    case Restriction::SMon: return "smon";
    case Restriction::NU: return "nu";
    case Restriction::SNU: return "snu";
    case Restriction::SDec: return "sdec";
    case Restriction::LocConv: return "locconv";
    case Restriction::Wb: return "wb";
    case Restriction::Canny: return "canny";
  }
  return "?";
}

std::optional<Restriction> parse_restriction(const std::string& s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto r : kAllRestrictions)
    if (to_string(r) == low) return r;
  return std::nullopt;
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Pass: return "PASS";
    case BoundedPass: return "BOUNDED-PASS(" + std::to_string(radius) + ")";
    case Fail:
      return "FAIL(" + std::to_string(witness[0]) + "," + std::to_string(witness[1]) + "," +
             std::to_string(witness[2]) + ")";
  }
  return "?";
}

HypSeq hyp_seq(const Trace& tr) {
  HypSeq q;
  q.dim = tr.meta.dim;
  q.ids.push_back(tr.meta.initial.id);
  q.sems.push_back(tr.meta.initial.semantics);
  for (const auto& s : tr.steps) {
    q.ids.push_back(s.hyp.id);
    q.sems.push_back(s.hyp.semantics);
    q.data.push_back(s.datum);
  }
  return q;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Semantic questions about the distinct hypothesis semantics of one sequence,
// memoized by representative.
class Semantics {
 public:
  Semantics(const HypSeq& q, const Adapter& a) : q_(q), a_(a) {
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& l : q.sems) {
      auto [it, fresh] = seen.emplace(to_json(l).dump(), reps_.size());
      if (fresh) reps_.push_back(&l);
      rep_.push_back(it->second);
    }
    sub_.assign(reps_.size() * reps_.size(), -1);
    box_.resize(reps_.size());
  }

  std::size_t size() const { return reps_.size(); }
  std::size_t rep(std::size_t t) const { return rep_[t]; }
  bool member(std::size_t r, const IntVec& p) const { return itinf::member(*reps_[r], p); }
  bool bounded_used() const { return bounded_used_; }

  bool subset(std::size_t a, std::size_t b) {
    if (a == b) return true;
    auto& m = sub_[a * reps_.size() + b];
    if (m < 0) {
      std::optional<bool> v;
      if (!a_.force_bounded) v = exact_subset(*reps_[a], *reps_[b]);
      if (!v) {
        const auto& ba = box(a);
        const auto& bb = box(b);
        bool inc = true;
        for (std::size_t i = 0; i < ba.size() && inc; ++i) inc = !ba[i] || bb[i];
        v = inc;
      }
      m = *v ? 1 : 0;
    }
    return m == 1;
  }

  // Equality class of every hypothesis index.
  const std::vector<std::size_t>& classes() {
    if (!cls_.empty()) return cls_;
    std::vector<std::size_t> rep_cls(reps_.size());
    std::unordered_map<std::string, std::size_t> keyed;
    std::vector<std::size_t> leaders;  // representatives leading each class
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      std::optional<std::string> key;
      if (a_.force_bounded) {
        const auto& b = box(i);
        key = std::string(b.begin(), b.end());
      } else {
        key = exact_key(*reps_[i]);
      }
      std::size_t found = kNone;
      if (key) {
        auto it = keyed.find(*key);
        if (it != keyed.end()) found = it->second;
      }
      if (found == kNone && !a_.force_bounded) {
        for (std::size_t c = 0; c < leaders.size() && found == kNone; ++c) {
          std::size_t j = leaders[c];
          if (key && exact_key(*reps_[j])) continue;  // keys already disagree
          if (equal(i, j)) found = c;
        }
      }
      if (found == kNone) {
        found = leaders.size();
        leaders.push_back(i);
      }
      if (key) keyed.emplace(*key, found);
      rep_cls[i] = found;
    }
    for (std::size_t t = 0; t < rep_.size(); ++t) cls_.push_back(rep_cls[rep_[t]]);
    return cls_;
  }

 private:
  bool equal(std::size_t a, std::size_t b) {
    auto v = exact_equal(*reps_[a], *reps_[b]);
    if (v) return *v;
    return box(a) == box(b);
  }

  const std::vector<char>& box(std::size_t r) {
    if (!a_.radius)
      throw Error(Errc::AdapterInsufficient, "adapter insufficient: no exact decider and no radius");
    bounded_used_ = true;
    auto& b = box_[r];
    if (b.empty()) {
      const long R = static_cast<long>(*a_.radius);
      const std::size_t side = static_cast<std::size_t>(2 * R + 1);
      std::size_t n = 1;
      for (std::size_t k = 0; k < q_.dim; ++k) n *= side;
      b.resize(n);
      IntVec p(q_.dim);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t x = i;
        for (std::size_t k = 0; k < q_.dim; ++k) {
          p[k] = static_cast<long>(x % side) - R;
          x /= side;
        }
        b[i] = itinf::member(*reps_[r], p) ? 1 : 0;
      }
    }
    return b;
  }

  const HypSeq& q_;
  const Adapter& a_;
  std::vector<const Language*> reps_;
  std::vector<std::size_t> rep_;
  std::vector<signed char> sub_;
  std::vector<std::vector<char>> box_;
  std::vector<std::size_t> cls_;
  bool bounded_used_ = false;
};

struct Ctx {
  const HypSeq& q;
  Semantics sem;
  std::size_t T;                 // number of data
  std::vector<std::size_t> sid;  // syntactic identity per hypothesis index
  std::vector<std::size_t> nc;   // next index with a different id, or kNone

  Ctx(const HypSeq& qq, const Adapter& a) : q(qq), sem(qq, a), T(qq.data.size()) {
    std::unordered_map<std::string, std::size_t> ids;
    for (const auto& id : q.ids) sid.push_back(ids.emplace(id, ids.size()).first->second);
    nc.assign(T + 1, kNone);
    for (std::size_t t = T; t-- > 0;) nc[t] = sid[t + 1] != sid[t] ? t + 1 : nc[t + 1];
  }

  bool agrees(std::size_t rep, std::size_t i) const {
    return sem.member(rep, q.data[i].point) == (q.data[i].label == 1);
  }

  // First data index the representative mislabels, or T. Cons(I[t], W) iff t <= f.
  std::size_t first_bad(std::size_t rep) {
    if (fb_.empty()) fb_.assign(sem.size(), kNone);
    auto& f = fb_[rep];
    if (f == kNone) {
      f = T;
      for (std::size_t i = 0; i < T; ++i)
        if (!agrees(rep, i)) {
          f = i;
          break;
        }
    }
    return f;
  }
  std::size_t first_bad_at(std::size_t t) { return first_bad(sem.rep(t)); }

  std::vector<std::size_t> fb_;
};

using Witness = std::optional<std::array<std::uint64_t, 3>>;

Witness at(std::size_t r, std::size_t s, std::size_t t) { return std::array<std::uint64_t, 3>{r, s, t}; }

Witness check_conv(Ctx& c) {
  for (std::size_t s = 0; s <= c.T; ++s)
    if (c.nc[s] != kNone && c.nc[s] <= c.first_bad_at(s)) return at(s, s, c.nc[s]);
  return std::nullopt;
}

// W_r = W_t with r <= s <= t forces a relation between index r and s; the
// relation fails first at `next` and the earliest return of r's class decides.
Witness check_return(Ctx& c, const std::vector<std::size_t>& cls, bool syntactic_s, bool need_success) {
  std::map<std::size_t, std::vector<std::size_t>> where;
  for (std::size_t t = 0; t <= c.T; ++t) where[cls[t]].push_back(t);
  std::vector<std::size_t> ndiff(c.T + 1, kNone);
  for (std::size_t t = c.T; t-- > 0;) ndiff[t] = cls[t + 1] != cls[t] ? t + 1 : ndiff[t + 1];
  for (std::size_t r = 0; r <= c.T; ++r) {
    if (need_success && c.first_bad_at(r) != c.T) continue;
    std::size_t s = syntactic_s ? c.nc[r] : ndiff[r];
    if (s == kNone) continue;
    const auto& w = where[cls[r]];
    auto it = std::lower_bound(w.begin(), w.end(), s);
    if (it != w.end()) return at(r, s, *it);
  }
  return std::nullopt;
}

template <class Bad>
Witness check_pairs(Ctx& c, Bad bad) {
  for (std::size_t s = 0; s <= c.T; ++s)
    for (std::size_t t = s; t <= c.T; ++t)
      if (bad(s, t)) return at(s, s, t);
  return std::nullopt;
}

Witness check_mon(Ctx& c) {
  std::vector<IntVec> P;
  for (const auto& d : c.q.data)
    if (d.label == 1) P.push_back(d.point);
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  std::vector<std::vector<char>> mask(c.sem.size());
  for (std::size_t r = 0; r < mask.size(); ++r)
    for (const auto& p : P) mask[r].push_back(c.sem.member(r, p) ? 1 : 0);
  std::map<std::pair<std::size_t, std::size_t>, bool> memo;
  return check_pairs(c, [&](std::size_t s, std::size_t t) {
    std::size_t a = c.sem.rep(s), b = c.sem.rep(t);
    if (a == b) return false;
    auto [it, fresh] = memo.emplace(std::make_pair(a, b), false);
    if (fresh)
      for (std::size_t i = 0; i < P.size(); ++i)
        if (mask[a][i] && !mask[b][i]) it->second = true;
    return it->second;
  });
}

Witness check_locconv(Ctx& c) {
  for (std::size_t t = 0; t < c.T; ++t)
    if (c.sid[t] != c.sid[t + 1] && c.agrees(c.sem.rep(t), t)) return at(t, t, t + 1);
  return std::nullopt;
}

Witness check_wb(Ctx& c) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  // Earliest datum that justifies moving from semantics a to semantics b.
  auto earliest = [&](std::size_t a, std::size_t b) {
    auto [it, fresh] = memo.emplace(std::make_pair(a, b), c.T);
    if (fresh)
      for (std::size_t i = 0; i < c.T; ++i) {
        const auto& d = c.q.data[i];
        bool ina = c.sem.member(a, d.point), inb = c.sem.member(b, d.point);
        if ((d.label == 1 && inb && !ina) || (d.label == 0 && ina && !inb)) {
          it->second = i;
          break;
        }
      }
    return it->second;
  };
  for (std::size_t r = 0; r <= c.T; ++r) {
    if (r > 0 && c.sid[r] == c.sid[r - 1]) continue;
    std::size_t s = c.nc[r];
    if (s == kNone) continue;
    for (std::size_t t = s; t <= c.T; ++t)
      if (earliest(c.sem.rep(r), c.sem.rep(t)) >= s) return at(r, s, t);
  }
  return std::nullopt;
}

Witness check_canny(Ctx& c) {
  std::map<Datum, std::size_t> first;
  Witness best;
  for (std::size_t t = 0; t < c.T; ++t) {
    if (c.sid[t] == c.sid[t + 1]) continue;
    auto [it, fresh] = first.emplace(c.q.data[t], t);
    if (!fresh) {
      auto w = at(it->second, t, t);
      if (!best || *w < *best) best = w;
    }
  }
  return best;
}

}  // namespace

Verdict validate(const HypSeq& q, Restriction r, const Adapter& adapter) {
  if (q.ids.size() != q.data.size() + 1 || q.sems.size() != q.ids.size())
    throw Error(Errc::InvalidSpec, "hypothesis sequence must be one longer than the data");
  Ctx c(q, adapter);
  Witness w;
  switch (r) {
    case Restriction::Conv: w = check_conv(c); break;
    case Restriction::Dec: w = check_return(c, c.sem.classes(), false, false); break;
    case Restriction::NU: w = check_return(c, c.sem.classes(), false, true); break;
    case Restriction::SDec: w = check_return(c, c.sem.classes(), true, false); break;
    case Restriction::SNU: w = check_return(c, c.sem.classes(), true, true); break;
    case Restriction::Caut:
      w = check_pairs(c, [&](std::size_t s, std::size_t t) {
        std::size_t a = c.sem.rep(s), b = c.sem.rep(t);
        return a != b && c.sem.subset(b, a) && !c.sem.subset(a, b);
      });
      break;
    case Restriction::WMon:
      w = check_pairs(c, [&](std::size_t s, std::size_t t) {
        return t <= c.first_bad_at(s) && !c.sem.subset(c.sem.rep(s), c.sem.rep(t));
      });
      break;
    case Restriction::Mon: w = check_mon(c); break;
    case Restriction::SMon:
      w = check_pairs(c, [&](std::size_t s, std::size_t t) { return !c.sem.subset(c.sem.rep(s), c.sem.rep(t)); });
      break;
    case Restriction::LocConv: w = check_locconv(c); break;
    case Restriction::Wb: w = check_wb(c); break;
    case Restriction::Canny: w = check_canny(c); break;
  }
  Verdict v;
  v.bounded = c.sem.bounded_used();
  if (w) {
    v.kind = Verdict::Fail;
    v.witness = *w;
  } else if (v.bounded) {
    v.kind = Verdict::BoundedPass;
    v.radius = *adapter.radius;
  }
  return v;
}

Verdict validate(const Trace& tr, Restriction r, const Adapter& adapter) {
  return validate(hyp_seq(tr), r, adapter);
}

}  // namespace itinf
