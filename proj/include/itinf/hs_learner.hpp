// Iterative learner of integral half-spaces from informants, any dimension.
#pragma once

#include "itinf/learner.hpp"

#include <optional>
#include <vector>

namespace itinf {

struct LockPair {
  BasicSet cplus;   // sorted, received positive
  BasicSet cminus;  // sorted, received negative
  HalfSpace plus;   // positive tangent: cplus on its boundary
  HalfSpace minus;  // negative tangent: cminus on its boundary
};

// Least candidate under (sorted cplus, sorted cminus) lexicographic order.
std::optional<LockPair> find_lock(const std::vector<Datum>& data, std::size_t d);
// Same, restricted to candidates that use one of the given data points.
std::optional<LockPair> find_lock_using(const std::vector<Datum>& data, const std::vector<Datum>& must,
                                        std::size_t d);

struct HsLearnerState : LearnerState {
  std::size_t dim = 0;
  bool locked = false;
  std::vector<Datum> retained;   // open mode, sorted
  std::optional<Datum> pending;  // violator that any lock in `retained` must use
  LockPair lock;                 // locked mode
};

HsLearnerState hs_learner_initial(std::size_t d);
HsLearnerState hs_learner_step(const HsLearnerState& s, const Datum& datum);
Hypothesis hs_learner_hypothesis(std::shared_ptr<const HsLearnerState> s);

class HsLearner : public IterativeLearner {
 public:
  explicit HsLearner(std::size_t d) : d_(d) {}
  std::string name() const override { return "general"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;

 private:
  std::size_t d_;
};

}  // namespace itinf
