// Locally conservative iterative learners for two fixture families. They give
// the witness-based transform a base learner whose behavior is known.
#pragma once

#include "itinf/learner.hpp"

namespace itinf {

struct IndexState : LearnerState {
  Nat index;
};

// {N} ∪ {N \ {x}}: guesses N until some x is seen negative.
class CoSingletonLearner : public IterativeLearner {
 public:
  std::string name() const override { return "cosingleton"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;
};

// Finite sets: guesses the positive data seen so far.
class FinLearner : public IterativeLearner {
 public:
  std::string name() const override { return "fin"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;
};

Hypothesis fixture_hypothesis(const std::string& family, const Nat& index);

}  // namespace itinf
