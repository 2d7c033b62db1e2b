// Run traces and their JSONL form.
#pragma once

#include "itinf/json_util.hpp"
#include "itinf/language.hpp"
#include "itinf/streams.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace itinf {

inline constexpr const char* kCodeVersion = "itinf-1";
inline constexpr const char* kEnumerationName = "shell-lex";

struct TraceHyp {
  std::string id;
  Language semantics;
  std::string mode;
  std::optional<Rat> lock_dist_sq;
};

struct TraceMeta {
  std::size_t dim = 0;
  Json target;  // semantics of the target language
  Json stream;  // stream spec, or null for hand-made traces
  std::string learner;
  std::string pairing = "cantor";
  std::string enumeration = kEnumerationName;
  std::string code_version = kCodeVersion;
  TraceHyp initial;
};

// Step t records datum I(t) and the hypothesis output after it.
struct TraceStep {
  std::uint64_t t = 0;
  Datum datum;
  TraceHyp hyp;
};

struct TraceSummary {
  std::string status;
  std::optional<std::uint64_t> t0;
  std::uint64_t locks = 0;
  std::uint64_t steps = 0;
};

struct Trace {
  TraceMeta meta;
  std::vector<TraceStep> steps;
  std::optional<TraceSummary> summary;
};

Json stream_to_json(const StreamSpec& s);
// The target comes from the trace header, not the stream object.
StreamSpec stream_from_json(const Json& j, const HalfSpace& target);

std::string trace_to_jsonl(const Trace& tr);
// Throws ParseError on malformed input.
Trace trace_from_jsonl(std::istream& in);
Trace trace_from_jsonl_string(const std::string& s);

}  // namespace itinf
