// Exact feasibility of small linear systems over the rationals.
#pragma once

#include "itinf/num.hpp"

#include <vector>

namespace itinf::fm {

// sum(coef[i] * x[i]) + constant, compared against zero.
struct Constraint {
  std::vector<Rat> coef;
  Rat constant = 0;
  bool equality = false;  // "= 0" when set, "≥ 0" otherwise
};

// Equalities are removed by substitution first, then the remaining
// inequalities go through Fourier–Motzkin elimination one variable at a time.
bool feasible(std::size_t nvars, std::vector<Constraint> cs);

}  // namespace itinf::fm
