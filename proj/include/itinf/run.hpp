// The referee loop: feed a stream to a learner and judge convergence.
#pragma once

#include "itinf/learner.hpp"
#include "itinf/trace.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace itinf {

enum class RunStatus { Converged, SyntacticStable, NotConverged };
std::string to_string(RunStatus s);

struct RunOptions {
  std::uint64_t max_steps = 2000;
  std::uint64_t window = 50;
};

struct RunResult {
  Trace trace;
  RunStatus status = RunStatus::NotConverged;
  // Number of data consumed when the final hypothesis first appeared.
  std::optional<std::uint64_t> t0;
  std::uint64_t locks = 0;
};

using DatumSource = std::function<Datum(std::uint64_t)>;

// Runs until the hypothesis id has been unchanged for `window` steps while
// denoting the target, or until max_steps data were fed. Learner errors are
// rethrown with the step index prepended.
RunResult run(const IterativeLearner& learner, const DatumSource& source, const Language& target,
              TraceMeta meta, const RunOptions& opt);
RunResult run(const IterativeLearner& learner, const StreamSpec& spec, const RunOptions& opt);

TraceHyp trace_hyp(const Hypothesis& h);

}  // namespace itinf
