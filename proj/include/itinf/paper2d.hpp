// The coded two-dimensional learner: every hypothesis is a natural number.
//   even 2<s, <d_1,...,d_s>>   data collection, d_i = <<w_i>, label_i>
//   odd  2<<u>,<v>,<x>,<y>>+1  locked on the line through u, v with x, y outside
#pragma once

#include "itinf/learner.hpp"

#include <array>
#include <optional>

namespace itinf {

bool lock_property_2d(const IntVec& u, const IntVec& v, const IntVec& x, const IntVec& y);

// Half-space of the line through u, v oriented away from x, y (caller checks LOCK).
HalfSpace lock_halfspace_2d(const IntVec& u, const IntVec& v, const IntVec& x);

struct Decoded2D {
  bool odd = false;
  std::vector<Datum> stored;                   // even codes
  std::optional<std::array<IntVec, 4>> lock;   // odd codes with the LOCK property
};

// Throws MalformedCode when a stored label is not a bit.
Decoded2D decode_2d(const Nat& code);
// Language denoted by a code; the dummy y >= 0 unless it is a LOCK code.
HalfSpace semantics_2d(const Nat& code);

Nat learner_2d_step(const Nat& code, const Nat& coded_point, int label);

struct Paper2DState : LearnerState {
  Nat code;
};

Hypothesis paper2d_hypothesis(const Nat& code);

class Paper2DLearner : public IterativeLearner {
 public:
  std::string name() const override { return "paper2d"; }
  Hypothesis init() const override { return paper2d_hypothesis(0); }
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;
};

}  // namespace itinf
