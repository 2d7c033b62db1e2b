#include "itinf/run.hpp"

#include "itinf/error.hpp"

namespace itinf {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "CONVERGED";
    case RunStatus::SyntacticStable: return "SYNTACTIC-STABLE";
    case RunStatus::NotConverged: return "NOT_CONVERGED";
  }
  return "?";
}

TraceHyp trace_hyp(const Hypothesis& h) { return {h.id, h.semantics, h.mode, h.lock_dist_sq}; }

namespace {

bool denotes(const Language& a, const Language& b) {
  auto e = exact_equal(a, b);
  if (!e) throw Error(Errc::AdapterInsufficient, "no exact equality for the target");
  return *e;
}

}  // namespace

RunResult run(const IterativeLearner& learner, const DatumSource& source, const Language& target,
              TraceMeta meta, const RunOptions& opt) {
  if (opt.window < 1) throw Error(Errc::InvalidSpec, "convergence window must be at least 1");
  RunResult res;
  Hypothesis h = learner.init();
  meta.learner = learner.name();
  meta.initial = trace_hyp(h);
  res.trace.meta = std::move(meta);

  std::uint64_t last_change = 0;
  std::optional<bool> current_correct;
  for (std::uint64_t t = 0; t < opt.max_steps; ++t) {
    Datum d = source(t);
    Hypothesis next;
    try {
      next = learner.step(h, d);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(t) + ": " + e.what());
    }
    if (next.id != h.id) {
      last_change = t + 1;
      current_correct.reset();
      if (next.mode == "locked") ++res.locks;
    }
    h = std::move(next);
    res.trace.steps.push_back({t, d, trace_hyp(h)});
    if (t + 1 - last_change >= opt.window) {
      if (!current_correct) current_correct = denotes(h.semantics, target);
      if (*current_correct) {
        res.status = RunStatus::Converged;
        res.t0 = last_change;
        break;
      }
    }
  }
  if (res.status != RunStatus::Converged && !res.trace.steps.empty() &&
      res.trace.steps.size() - last_change >= opt.window)
    res.status = RunStatus::SyntacticStable;
  res.trace.summary = TraceSummary{to_string(res.status), res.t0, res.locks, res.trace.steps.size()};
  return res;
}

RunResult run(const IterativeLearner& learner, const StreamSpec& spec, const RunOptions& opt) {
  validate(spec);
  auto stream = std::make_shared<Stream>(spec);
  TraceMeta meta;
  meta.dim = spec.target.normal.size();
  meta.target = to_json(Language::halfspace(spec.target));
  meta.stream = stream_to_json(spec);
  return run(learner, [stream](std::uint64_t t) { return stream->at(t); }, Language::halfspace(spec.target),
             std::move(meta), opt);
}

}  // namespace itinf
