// Learner transforms: the canny normal form and the witness-based enlargement.
#pragma once

#include "itinf/learner.hpp"

#include <memory>
#include <set>

namespace itinf {

// Replays M on the subsequence of data that changed M's mind. A datum whose
// point already occurs in that subsequence is ignored.
class CannyWrap : public IterativeLearner {
 public:
  explicit CannyWrap(std::shared_ptr<const IterativeLearner> m) : m_(std::move(m)) {}
  std::string name() const override { return "canny(" + m_->name() + ")"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;

 private:
  std::shared_ptr<const IterativeLearner> m_;
};

// Pairs M's hypothesis with the set MC of data that caused a mind change and
// denotes (W ∪ pos(MC)) ∖ neg(MC).
class WitnessWrap : public IterativeLearner {
 public:
  explicit WitnessWrap(std::shared_ptr<const IterativeLearner> m) : m_(std::move(m)) {}
  std::string name() const override { return "witness(" + m_->name() + ")"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;

 private:
  std::shared_ptr<const IterativeLearner> m_;
};

struct CannyState : LearnerState {
  Hypothesis inner;                                   // M(sigma)
  std::shared_ptr<const std::set<IntVec>> points;     // content(sigma)
  std::string sigma;                                  // serialized sigma
};

struct WitnessState : LearnerState {
  Hypothesis inner;
  std::set<Datum> mc;
};

}  // namespace itinf
