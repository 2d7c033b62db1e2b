// The iterative learner contract shared by every learner and transform.
#pragma once

#include "itinf/language.hpp"
#include "itinf/streams.hpp"

#include <memory>
#include <optional>
#include <string>

namespace itinf {

// Learner-private memory. It lives inside the hypothesis, so a step can only
// see the previous hypothesis and the new datum.
struct LearnerState {
  virtual ~LearnerState() = default;
};

struct Hypothesis {
  std::string id;                   // identity compared by syntactic restrictions
  Language semantics;
  std::string mode;                 // e.g. "open", "locked", "collect"
  std::optional<Rat> lock_dist_sq;  // present exactly when locked
  std::shared_ptr<const LearnerState> state;
};

class IterativeLearner {
 public:
  virtual ~IterativeLearner() = default;
  virtual std::string name() const = 0;
  virtual Hypothesis init() const = 0;
  virtual Hypothesis step(const Hypothesis& h, const Datum& d) const = 0;
};

template <class S>
const S& state_as(const Hypothesis& h) {
  const auto* s = dynamic_cast<const S*>(h.state.get());
  if (!s) throw std::logic_error("hypothesis from a different learner");
  return *s;
}

}  // namespace itinf
