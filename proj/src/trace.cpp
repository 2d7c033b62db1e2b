#include "itinf/trace.hpp"

#include "itinf/error.hpp"

#include <istream>
#include <sstream>

namespace itinf {
namespace {

Json hyp_fields(Json j, const TraceHyp& h) {
  j["hypothesis"] = h.id;
  j["semantics"] = to_json(h.semantics);
  j["mode"] = h.mode;
  if (h.lock_dist_sq) j["lock_distance_sq"] = rat_to_string(*h.lock_dist_sq);
  return j;
}

TraceHyp read_hyp(const Json& j) {
  TraceHyp h;
  h.id = j.at("hypothesis").get<std::string>();
  h.semantics = language_from_json(j.at("semantics"));
  h.mode = j.at("mode").get<std::string>();
  if (j.contains("lock_distance_sq")) h.lock_dist_sq = parse_rat(j.at("lock_distance_sq").get<std::string>());
  return h;
}

std::uint64_t get_u64(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw Error(Errc::ParseError, std::string("field ") + key + " must be a natural number");
  return v.get<std::uint64_t>();
}

}  // namespace

Json stream_to_json(const StreamSpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["seed"] = s.seed;
  if (s.kind == StreamKind::RepeatHeavy) j["repeat"] = s.repeat;
  if (s.kind == StreamKind::Withhold) {
    j["withheld"] = vec_to_json(s.withheld);
    j["at"] = s.withhold_at;
  }
  return j;
}

StreamSpec stream_from_json(const Json& j, const HalfSpace& target) {
  StreamSpec s;
  s.target = target;
  auto kind = parse_stream_kind(j.at("kind").get<std::string>());
  if (!kind) throw Error(Errc::ParseError, "unknown stream kind");
  s.kind = *kind;
  s.seed = get_u64(j, "seed");
  if (j.contains("repeat")) s.repeat = get_u64(j, "repeat");
  if (j.contains("withheld")) s.withheld = json_to_vec(j.at("withheld"));
  if (j.contains("at")) s.withhold_at = get_u64(j, "at");
  return s;
}

std::string trace_to_jsonl(const Trace& tr) {
  std::string out;
  Json h;
  h["type"] = "header";
  h["dimension"] = tr.meta.dim;
  h["target"] = tr.meta.target;
  h["stream"] = tr.meta.stream;
  h["learner"] = tr.meta.learner;
  h["pairing"] = tr.meta.pairing;
  h["enumeration"] = tr.meta.enumeration;
  h["code_version"] = tr.meta.code_version;
  h["initial"] = hyp_fields(Json::object(), tr.meta.initial);
  out += h.dump() + "\n";
  for (const auto& s : tr.steps) {
    Json j;
    j["type"] = "step";
    j["t"] = s.t;
    j["point"] = vec_to_json(s.datum.point);
    j["label"] = s.datum.label;
    out += hyp_fields(std::move(j), s.hyp).dump() + "\n";
  }
  if (tr.summary) {
    Json j;
    j["type"] = "summary";
    j["status"] = tr.summary->status;
    j["t0"] = tr.summary->t0 ? Json(*tr.summary->t0) : Json(nullptr);
    j["locks"] = tr.summary->locks;
    j["steps"] = tr.summary->steps;
    out += j.dump() + "\n";
  }
  return out;
}

Trace trace_from_jsonl(std::istream& in) {
  Trace tr;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      Json j = Json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (have_header) throw Error(Errc::ParseError, "second header");
        have_header = true;
        tr.meta.dim = j.at("dimension").get<std::size_t>();
        tr.meta.target = j.at("target");
        tr.meta.stream = j.at("stream");
        tr.meta.learner = j.at("learner").get<std::string>();
        tr.meta.pairing = j.at("pairing").get<std::string>();
        tr.meta.enumeration = j.at("enumeration").get<std::string>();
        tr.meta.code_version = j.at("code_version").get<std::string>();
        tr.meta.initial = read_hyp(j.at("initial"));
      } else if (type == "step") {
        if (!have_header) throw Error(Errc::ParseError, "step before header");
        if (tr.summary) throw Error(Errc::ParseError, "step after summary");
        TraceStep s;
        s.t = get_u64(j, "t");
        if (s.t != tr.steps.size()) throw Error(Errc::ParseError, "steps out of order");
        s.datum.point = json_to_vec(j.at("point"));
        if (s.datum.point.size() != tr.meta.dim) throw Error(Errc::ParseError, "point dimension mismatch");
        s.datum.label = j.at("label").get<int>();
        if (s.datum.label != 0 && s.datum.label != 1) throw Error(Errc::ParseError, "label must be 0 or 1");
        s.hyp = read_hyp(j);
        if (s.hyp.lock_dist_sq.has_value() != (s.hyp.mode == "locked"))
          throw Error(Errc::ParseError, "lock distance present iff locked");
        tr.steps.push_back(std::move(s));
      } else if (type == "summary") {
        if (!have_header || tr.summary) throw Error(Errc::ParseError, "misplaced summary");
        TraceSummary s;
        s.status = j.at("status").get<std::string>();
        if (!j.at("t0").is_null()) s.t0 = get_u64(j, "t0");
        s.locks = get_u64(j, "locks");
        s.steps = get_u64(j, "steps");
        tr.summary = s;
      } else {
        throw Error(Errc::ParseError, "unknown line type " + type);
      }
    }
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!have_header) throw Error(Errc::ParseError, "missing header");
  return tr;
}

Trace trace_from_jsonl_string(const std::string& s) {
  std::istringstream in(s);
  return trace_from_jsonl(in);
}

}  // namespace itinf
