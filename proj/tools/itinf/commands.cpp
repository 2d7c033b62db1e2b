#include "commands.hpp"

#include "itinf/codec.hpp"
#include "itinf/error.hpp"
#include "itinf/hs_learner.hpp"
#include "itinf/oracles.hpp"
#include "itinf/paper2d.hpp"
#include "itinf/run.hpp"
#include "itinf/validators.hpp"
#include "itinf/wrappers.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

namespace itinf::cli {
namespace {

Error field_error(const std::string& field, const std::string& msg) {
  return Error(Errc::ParseError, field + ": " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Rat rat_arg(const std::string& field, const std::string& s) {
  auto r = parse_rat(s);
  if (!r) throw field_error(field, "expected an exact rational p/q, got '" + s + "'");
  return *r;
}

Int int_arg(const std::string& field, const std::string& s) {
  auto v = parse_int(s);
  if (!v) throw field_error(field, "expected an integer, got '" + s + "'");
  return *v;
}

std::shared_ptr<const IterativeLearner> make_learner(const std::string& name, std::size_t dim) {
  auto general = std::make_shared<const HsLearner>(dim);
  if (name == "general") return general;
  if (name == "canny" || name == "canny(general)") return std::make_shared<const CannyWrap>(general);
  if (name == "witness" || name == "witness(general)") return std::make_shared<const WitnessWrap>(general);
  if (name == "paper2d") {
    if (dim != 2) throw field_error("--learner", "paper2d requires dimension 2");
    return std::make_shared<const Paper2DLearner>();
  }
  throw field_error("--learner", "unknown learner '" + name + "'");
}

StreamSpec make_stream(const StreamOpts& o, const HalfSpace& target) {
  StreamSpec s;
  s.target = target;
  auto kind = parse_stream_kind(o.kind);
  if (!kind) throw field_error("--stream", "unknown kind '" + o.kind + "'");
  s.kind = *kind;
  s.seed = o.seed;
  s.repeat = o.repeat;
  if (!o.withheld.empty())
    for (const auto& c : split(o.withheld, ',')) s.withheld.push_back(int_arg("--withheld", c));
  s.withhold_at = o.withhold_at;
  try {
    validate(s);
  } catch (const Error& e) {
    throw field_error("--stream", e.what());
  }
  return s;
}

std::string summary_line(const RunResult& r) {
  if (r.status == RunStatus::Converged)
    return "CONVERGED t=" + std::to_string(*r.t0) + " locks=" + std::to_string(r.locks);
  return "NOT_CONVERGED";
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
  f << data;
  if (!f) throw Error(Errc::ParseError, "write failed for " + path);
}

std::string join_vec(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

// Re-derives the stream recorded in the header and compares it datum by datum.
void check_replay(const Trace& tr) {
  if (tr.meta.stream.is_null()) return;
  if (tr.meta.pairing != kPairingName || tr.meta.enumeration != kEnumerationName)
    throw Error(Errc::ParseError, "trace uses an unknown pairing or enumeration");
  Language target = language_from_json(tr.meta.target);
  const auto* hs = std::get_if<HalfSpace>(&target.node);
  if (!hs) return;
  Stream stream(stream_from_json(tr.meta.stream, *hs));
  for (const auto& s : tr.steps)
    if (stream.at(s.t) != s.datum)
      throw Error(Errc::ParseError, "datum at t=" + std::to_string(s.t) + " does not match the recorded stream");
}

}  // namespace

int cmd_run(const RunConfig& c, std::ostream& out) {
  if (c.dim == 0) throw field_error("--dim", "must be positive");
  std::vector<Rat> slopes;
  for (const auto& s : split(c.target, ',')) slopes.push_back(rat_arg("--target", s));
  if (slopes.size() != c.dim)
    throw field_error("--dim", "target has " + std::to_string(slopes.size()) + " slopes, expected " +
                                   std::to_string(c.dim));
  Rat off = rat_arg("--offset", c.offset);
  HalfSpace target = halfspace_from_rational(slopes, off);
  StreamSpec spec = make_stream(c.stream, target);
  auto learner = make_learner(c.learner, c.dim);
  if (c.window < 1) throw field_error("--window", "must be at least 1");
  RunResult r = run(*learner, spec, {c.max_steps, c.window});
  if (!c.out.empty()) write_file(c.out, trace_to_jsonl(r.trace));
  out << summary_line(r) << "\n";
  return r.status == RunStatus::Converged ? kExitOk : kExitNotConverged;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  std::ifstream f(c.trace, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open " + c.trace);
  Trace tr;
  try {
    tr = trace_from_jsonl(f);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("malformed trace: ") + e.what());
  }
  check_replay(tr);
  std::vector<Restriction> rs;
  for (const auto& name : split(c.restrictions, ',')) {
    auto r = parse_restriction(name);
    if (!r) throw field_error("--restrictions", "unknown restriction '" + name + "'");
    rs.push_back(*r);
  }
  if (c.bounded && !c.radius) throw field_error("--bounded", "needs --radius");
  Adapter a{c.radius, c.bounded};
  HypSeq q = hyp_seq(tr);
  bool ok = true;
  for (auto r : rs) {
    Verdict v = validate(q, r, a);
    ok = ok && v.ok();
    out << to_string(r) << " " << v.to_string() << "\n";
  }
  return ok ? kExitOk : kExitNotConverged;
}

int cmd_bench(const BenchConfig& c, std::ostream& out) {
  if (c.dim == 0 || c.dim > 4) throw field_error("--dim", "must be between 1 and 4");
  if (c.coeff_bound < 1) throw field_error("--coeff-bound", "must be positive");
  if (c.offset_min > c.offset_max) throw field_error("--offset-min", "exceeds --offset-max");
  auto learner = make_learner(c.learner, c.dim);
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw Error(Errc::ParseError, "cannot open " + c.out + " for writing");
  }
  std::ostream& csv = c.out.empty() ? out : file;
  csv << "target,seed,status,steps_to_converge,lock_count,max_lock_count_bound\n";
  if (c.seeds == 0) return kExitOk;

  std::vector<long> a(c.dim, -c.coeff_bound);
  while (true) {
    long g = 0, norm2 = 0;
    for (long x : a) {
      g = std::gcd(g, x);
      norm2 += x * x;
    }
    if (g == 1) {
      IntVec normal;
      for (long x : a) normal.push_back(Int(x));
      const std::uint64_t bound = primitive_count_within(c.dim, Int(norm2));
      for (long b = c.offset_min; b <= c.offset_max; ++b) {
        HalfSpace target{normal, Int(b)};
        for (std::uint64_t seed = 0; seed < c.seeds; ++seed) {
          StreamSpec spec;
          spec.target = target;
          spec.kind = StreamKind::Permuted;
          spec.seed = seed;
          csv << join_vec(normal) << " | " << b << "," << seed << ",";
          try {
            RunResult r = run(*learner, spec, {c.max_steps, c.window});
            csv << to_string(r.status) << "," << (r.t0 ? std::to_string(*r.t0) : "") << "," << r.locks << ","
                << bound << "\n";
          } catch (const Error& e) {
            csv << "ERROR,,," << bound << "\n";
          }
        }
      }
    }
    std::size_t k = 0;
    while (k < c.dim && a[k] == c.coeff_bound) a[k++] = -c.coeff_bound;
    if (k == c.dim) break;
    ++a[k];
  }
  return kExitOk;
}

int cmd_geom(const std::string& op, const std::vector<std::string>& args, std::size_t j, std::ostream& out) {
  auto rats = [&](std::size_t from, std::size_t to) {
    std::vector<Rat> v;
    for (std::size_t i = from; i < to; ++i) v.push_back(rat_arg("args", args[i]));
    return v;
  };
  auto plane = [&]() {
    if (args.size() < 2) throw field_error("args", "expected slopes followed by an offset");
    return reduce_hyperplane(rats(0, args.size() - 1), rat_arg("args", args.back()));
  };
  if (op == "reduce") {
    Hyperplane h = plane();
    out << join_vec(h.normal) << " | " << rat_to_string(h.offset) << "\n";
  } else if (op == "tangent") {
    TangentPair t = tangents(plane());
    out << "plus: " << join_vec(t.plus.normal) << " | " << t.plus.offset << "\n";
    out << "minus: " << join_vec(t.minus.normal) << " | " << t.minus.offset << "\n";
  } else if (op == "mindist") {
    if (args.empty()) throw field_error("args", "expected a normal vector");
    IntVec a;
    for (const auto& s : args) a.push_back(int_arg("args", s));
    out << rat_to_string(min_parallel_distance_sq(a)) << " (squared)\n";
  } else if (op == "jdist") {
    Hyperplane h = plane();
    if (j < 1 || j > h.normal.size()) throw field_error("-j", "axis must be between 1 and the dimension");
    auto d = min_j_distance(h, j - 1);
    out << (d ? rat_to_string(*d) : "undefined") << "\n";
  } else {
    throw field_error("op", "unknown geometry operation '" + op + "'");
  }
  return kExitOk;
}

int cmd_transform(const std::string& in_path, const std::string& out_path, bool text, std::ostream& out) {
  std::ifstream f(in_path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open " + in_path);
  std::vector<NatDatum> in;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      if (!j.is_array() || j.size() != 2) throw Error(Errc::ParseError, "expected [n, label]");
      NatDatum d{json_to_nat(j[0]), j[1].get<int>()};
      if (d.label != 0 && d.label != 1) throw Error(Errc::ParseError, "label must be 0 or 1");
      in.push_back(std::move(d));
    } catch (const std::exception& e) {
      throw Error(Errc::ParseError, in_path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::string result;
  if (text) {
    for (const auto& item : bool_map_text(in)) result += (item ? nat_to_json(*item).dump() : "\"#\"") + "\n";
  } else {
    for (const auto& d : bool_map_informant(in)) result += Json::array({nat_to_json(d.n), d.label}).dump() + "\n";
  }
  if (out_path.empty())
    out << result;
  else
    write_file(out_path, result);
  return kExitOk;
}

}  // namespace itinf::cli
