#pragma once

#include <stdexcept>
#include <string>

namespace itinf {

enum class Errc {
  AllSlopesZero,
  ZeroVector,
  AffinelyDependent,
  NonIntegralOffset,
  NotPrimitive,
  DimMismatch,
  Inconsistent,
  InvalidSpec,
  InconsistentDatum,
  MalformedCode,
  UnderlyingLearnerUndefined,
  AdapterInsufficient,
  BoundsExceeded,
  BudgetExceeded,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace itinf
