// Informant prefixes, deterministic stream generators and the Boolean mapping.
#pragma once

#include "itinf/lattice.hpp"
#include "itinf/num.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace itinf {

struct Datum {
  IntVec point;
  int label = 0;  // 1 positive, 0 negative
  bool operator==(const Datum&) const = default;
  auto operator<=>(const Datum&) const = default;
};

using InformantPrefix = std::vector<Datum>;

std::string to_string(const Datum& d);

// All three throw Inconsistent when a point carries both labels.
std::set<IntVec> pos(const InformantPrefix& s);
std::set<IntVec> neg(const InformantPrefix& s);
std::set<Datum> content(const InformantPrefix& s);

bool consistent_with(const InformantPrefix& s, const HalfSpace& l);
bool consistent_with(const InformantPrefix& s, const std::function<bool(const IntVec&)>& member);

// Points of max-norm exactly k, in lexicographic order.
std::vector<IntVec> shell_points(std::size_t d, std::uint64_t k);
// Enumeration of Z^d by increasing max-norm shell, lexicographic inside a shell.
IntVec canonical_point(std::size_t d, std::uint64_t t);
std::uint64_t canonical_position(const IntVec& p);
Datum canonical_informant(const HalfSpace& target, std::uint64_t t);

enum class StreamKind { Canonical, Permuted, RepeatHeavy, Withhold };
std::string to_string(StreamKind k);
std::optional<StreamKind> parse_stream_kind(const std::string& s);

struct StreamSpec {
  HalfSpace target;
  StreamKind kind = StreamKind::Canonical;
  std::uint64_t seed = 0;
  std::uint64_t repeat = 1;      // repeat-heavy: repeats after each fresh item
  IntVec withheld;               // withhold: delayed point
  std::uint64_t withhold_at = 0; // withhold: index where it finally appears
};

// Throws InvalidSpec.
void validate(const StreamSpec& spec);

// Shuffle of shell k for a permuted stream: Fisher–Yates driven by
// std::mt19937_64 seeded with seed + 0x9E3779B97F4A7C15 * (k + 1). The engine
// is fully specified by the standard; std::shuffle is not, hence the loop.
std::vector<IntVec> permuted_shell(std::size_t d, std::uint64_t k, std::uint64_t seed);

// Random-access view of one stream; caches generated shells.
class Stream {
 public:
  explicit Stream(StreamSpec spec);
  Datum at(std::uint64_t t);
  const StreamSpec& spec() const { return spec_; }

 private:
  IntVec canonical_item(std::uint64_t u);
  const std::vector<IntVec>& shell(std::uint64_t k);

  StreamSpec spec_;
  std::size_t dim_;
  std::uint64_t withheld_pos_ = 0;
  std::map<std::uint64_t, std::vector<IntVec>> shells_;
};

Datum generate(const StreamSpec& spec, std::uint64_t t);

// Informant data over the naturals, used by the Boolean mapping.
struct NatDatum {
  Nat n;
  int label = 0;
  bool operator==(const NatDatum&) const = default;
};
using TextItem = std::optional<Nat>;  // nullopt is the pause symbol '#'

bool bool_map_member(const std::function<bool(const Nat&)>& in_l, const Nat& n);
// Emits (2n+1-l, 1) then (2n+l, 0) for every input (n, l). Throws Inconsistent.
std::vector<NatDatum> bool_map_informant(const std::vector<NatDatum>& in);
std::vector<TextItem> bool_map_text(const std::vector<NatDatum>& in);
// Parity decoding: element m gives n = m div 2 and l = 1 iff m is even.
std::vector<NatDatum> bool_map_decode_text(const std::vector<TextItem>& text);
std::vector<NatDatum> bool_map_decode_informant(const std::vector<NatDatum>& out);

}  // namespace itinf
