#include "itinf/streams.hpp"

#include "itinf/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace itinf {
namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of points with max-norm <= k, i.e. (2k+1)^d.
std::uint64_t box_count(std::size_t d, std::uint64_t k) { return ipow(2 * k + 1, d); }

// SplitMix64 finalizer, used as a stateless hash so repeat-heavy streams stay
// random-access in t.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <class Pt, class Get>
void check_labels(const std::vector<Pt>& items, Get get) {
  std::map<decltype(get(items[0]).first), int> seen;
  for (const auto& d : items) {
    auto [key, label] = get(d);
    auto [it, fresh] = seen.emplace(key, label);
    if (!fresh && it->second != label) throw Error(Errc::Inconsistent, "point labeled both ways");
  }
}

}  // namespace

std::string to_string(const Datum& d) { return vec_to_string(d.point) + (d.label ? "+" : "-"); }

std::set<Datum> content(const InformantPrefix& s) {
  std::map<IntVec, int> labels;
  std::set<Datum> out;
  for (const auto& d : s) {
    auto [it, fresh] = labels.emplace(d.point, d.label);
    if (!fresh && it->second != d.label) throw Error(Errc::Inconsistent, "point labeled both ways");
    out.insert(d);
  }
  return out;
}

std::set<IntVec> pos(const InformantPrefix& s) {
  std::set<IntVec> out;
  for (const auto& d : content(s))
    if (d.label == 1) out.insert(d.point);
  return out;
}

std::set<IntVec> neg(const InformantPrefix& s) {
  std::set<IntVec> out;
  for (const auto& d : content(s))
    if (d.label == 0) out.insert(d.point);
  return out;
}

bool consistent_with(const InformantPrefix& s, const HalfSpace& l) {
  return consistent_with(s, [&](const IntVec& p) { return hs_member(l, p); });
}

bool consistent_with(const InformantPrefix& s, const std::function<bool(const IntVec&)>& member) {
  for (const auto& d : s)
    if (member(d.point) != (d.label == 1)) return false;
  return true;
}

std::vector<IntVec> shell_points(std::size_t d, std::uint64_t k) {
  std::vector<IntVec> out;
  std::vector<long long> cur(d, -static_cast<long long>(k));
  const long long hi = static_cast<long long>(k);
  while (true) {
    long long m = 0;
    for (auto c : cur) m = std::max(m, c < 0 ? -c : c);
    if (m == hi) {
      IntVec p;
      for (auto c : cur) p.emplace_back(c);
      out.push_back(std::move(p));
    }
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == hi) cur[--i] = -hi;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

namespace {

// (shell, offset inside the shell) of canonical index t.
std::pair<std::uint64_t, std::uint64_t> locate(std::size_t d, std::uint64_t t) {
  std::uint64_t k = 0;
  while (box_count(d, k) <= t) ++k;
  std::uint64_t before = k == 0 ? 0 : box_count(d, k - 1);
  return {k, t - before};
}

std::uint64_t max_norm(const IntVec& p) {
  Int m = 0;
  for (const auto& c : p) m = std::max(m, Int(abs(c)));
  return static_cast<std::uint64_t>(m);
}

}  // namespace

IntVec canonical_point(std::size_t d, std::uint64_t t) {
  auto [k, off] = locate(d, t);
  return shell_points(d, k)[off];
}

std::uint64_t canonical_position(const IntVec& p) {
  const std::size_t d = p.size();
  std::uint64_t k = max_norm(p);
  auto pts = shell_points(d, k);
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  std::uint64_t before = k == 0 ? 0 : box_count(d, k - 1);
  return before + static_cast<std::uint64_t>(it - pts.begin());
}

Datum canonical_informant(const HalfSpace& target, std::uint64_t t) {
  IntVec p = canonical_point(target.normal.size(), t);
  int label = hs_member(target, p) ? 1 : 0;
  return {std::move(p), label};
}

std::string to_string(StreamKind k) {
  switch (k) {
    case StreamKind::Canonical: return "canonical";
    case StreamKind::Permuted: return "permuted";
    case StreamKind::RepeatHeavy: return "repeat-heavy";
    case StreamKind::Withhold: return "withhold";
  }
  return "?";
}

std::optional<StreamKind> parse_stream_kind(const std::string& s) {
  if (s == "canonical") return StreamKind::Canonical;
  if (s == "permuted") return StreamKind::Permuted;
  if (s == "repeat-heavy") return StreamKind::RepeatHeavy;
  if (s == "withhold") return StreamKind::Withhold;
  return std::nullopt;
}

void validate(const StreamSpec& spec) {
  const std::size_t d = spec.target.normal.size();
  if (d == 0) throw Error(Errc::InvalidSpec, "target has no dimension");
  if (!is_primitive(spec.target.normal)) throw Error(Errc::InvalidSpec, "target normal must be primitive");
  if (spec.kind == StreamKind::RepeatHeavy && spec.repeat == 0)
    throw Error(Errc::InvalidSpec, "repeat-heavy stream needs repeat >= 1");
  if (spec.kind == StreamKind::Withhold) {
    if (spec.withheld.size() != d) throw Error(Errc::InvalidSpec, "withheld point has wrong dimension");
    if (spec.withhold_at < canonical_position(spec.withheld))
      throw Error(Errc::InvalidSpec, "withhold index precedes the point's canonical position");
  }
}

std::vector<IntVec> permuted_shell(std::size_t d, std::uint64_t k, std::uint64_t seed) {
  auto pts = shell_points(d, k);
  std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (k + 1));
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(pts[i - 1], pts[j]);
  }
  return pts;
}

Stream::Stream(StreamSpec spec) : spec_(std::move(spec)), dim_(spec_.target.normal.size()) {
  validate(spec_);
  if (spec_.kind == StreamKind::Withhold) withheld_pos_ = canonical_position(spec_.withheld);
}

const std::vector<IntVec>& Stream::shell(std::uint64_t k) {
  auto it = shells_.find(k);
  if (it != shells_.end()) return it->second;
  auto pts = spec_.kind == StreamKind::Permuted ? permuted_shell(dim_, k, spec_.seed)
                                                : shell_points(dim_, k);
  return shells_.emplace(k, std::move(pts)).first->second;
}

IntVec Stream::canonical_item(std::uint64_t u) {
  auto [k, off] = locate(dim_, u);
  return shell(k)[off];
}

Datum Stream::at(std::uint64_t t) {
  IntVec p;
  switch (spec_.kind) {
    case StreamKind::Canonical:
    case StreamKind::Permuted:
      p = canonical_item(t);
      break;
    case StreamKind::RepeatHeavy: {
      std::uint64_t b = t / (spec_.repeat + 1);
      std::uint64_t j = t % (spec_.repeat + 1);
      if (j == 0) {
        p = canonical_item(b);
      } else {
        std::uint64_t h = mix64(spec_.seed ^ mix64(b * 0x9E3779B97F4A7C15ULL + j));
        p = canonical_item(h % (b + 1));
      }
      break;
    }
    case StreamKind::Withhold: {
      if (t == spec_.withhold_at) {
        p = spec_.withheld;
      } else {
        std::uint64_t u = t < spec_.withhold_at ? t : t - 1;
        p = canonical_item(u < withheld_pos_ ? u : u + 1);
      }
      break;
    }
  }
  int label = hs_member(spec_.target, p) ? 1 : 0;
  return {std::move(p), label};
}

Datum generate(const StreamSpec& spec, std::uint64_t t) { return Stream(spec).at(t); }

bool bool_map_member(const std::function<bool(const Nat&)>& in_l, const Nat& n) {
  Nat half = n / 2;
  bool in = in_l(half);
  return n % 2 == 0 ? in : !in;
}

namespace {

void check_consistent(const std::vector<NatDatum>& in) {
  if (in.empty()) return;
  check_labels(in, [](const NatDatum& d) { return std::pair<Nat, int>(d.n, d.label); });
}

}  // namespace

std::vector<NatDatum> bool_map_informant(const std::vector<NatDatum>& in) {
  check_consistent(in);
  std::vector<NatDatum> out;
  out.reserve(in.size() * 2);
  for (const auto& d : in) {
    Nat two_n = d.n * 2;
    out.push_back({two_n + 1 - d.label, 1});
    out.push_back({two_n + d.label, 0});
  }
  return out;
}

std::vector<TextItem> bool_map_text(const std::vector<NatDatum>& in) {
  check_consistent(in);
  std::vector<TextItem> out;
  out.reserve(in.size());
  for (const auto& d : in) out.emplace_back(d.n * 2 + 1 - d.label);
  return out;
}

std::vector<NatDatum> bool_map_decode_text(const std::vector<TextItem>& text) {
  std::vector<NatDatum> out;
  for (const auto& m : text) {
    if (!m) continue;
    out.push_back({*m / 2, *m % 2 == 0 ? 1 : 0});
  }
  return out;
}

std::vector<NatDatum> bool_map_decode_informant(const std::vector<NatDatum>& out) {
  if (out.size() % 2 != 0) throw Error(Errc::Inconsistent, "mapped informant has odd length");
  std::vector<NatDatum> in;
  for (std::size_t i = 0; i < out.size(); i += 2) {
    const auto& p = out[i];
    const auto& q = out[i + 1];
    if (p.label != 1 || q.label != 0 || p.n / 2 != q.n / 2 || p.n == q.n)
      throw Error(Errc::Inconsistent, "not the image of an informant");
    in.push_back({p.n / 2, p.n % 2 == 0 ? 1 : 0});
  }
  return in;
}

}  // namespace itinf
