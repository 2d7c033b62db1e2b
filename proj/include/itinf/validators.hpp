// Checks of learning restrictions on finite hypothesis sequences.
#pragma once

#include "itinf/language.hpp"
#include "itinf/streams.hpp"
#include "itinf/trace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itinf {

enum class Restriction { Conv, Dec, Caut, WMon, Mon, SMon, NU, SNU, SDec, LocConv, Wb, Canny };

inline constexpr std::array<Restriction, 12> kAllRestrictions = {
    Restriction::Conv, Restriction::Dec,  Restriction::Caut,    Restriction::WMon,
    Restriction::Mon,  Restriction::SMon, Restriction::NU,      Restriction::SNU,
    Restriction::SDec, Restriction::LocConv, Restriction::Wb,   Restriction::Canny};

std::string to_string(Restriction r);
// Case-insensitive; accepts the short names used by to_string.
std::optional<Restriction> parse_restriction(const std::string& s);

// How semantic questions are answered. Exact deciders come from the
// languages themselves; a radius enables bounded checks where they are
// missing, and force_bounded uses the box everywhere.
struct Adapter {
  std::optional<std::uint64_t> radius;
  bool force_bounded = false;
};

struct Verdict {
  enum Kind { Pass, Fail, BoundedPass } kind = Pass;
  std::array<std::uint64_t, 3> witness{};  // (r, s, t) when failing
  std::uint64_t radius = 0;                // for BoundedPass
  bool bounded = false;                    // a box check was used
  std::string to_string() const;
  bool ok() const { return kind != Fail; }
};

// h[0] is the initial hypothesis and h[t+1] the one output after data[t].
struct HypSeq {
  std::size_t dim = 1;
  std::vector<std::string> ids;
  std::vector<Language> sems;
  std::vector<Datum> data;
};

HypSeq hyp_seq(const Trace& tr);

// Throws AdapterInsufficient when an exact decider is missing and no radius is set.
Verdict validate(const HypSeq& seq, Restriction r, const Adapter& adapter = {});
Verdict validate(const Trace& tr, Restriction r, const Adapter& adapter = {});

}  // namespace itinf
