// Learning by enumeration: the least index consistent with everything seen.
#pragma once

#include "itinf/fixtures.hpp"
#include "itinf/learner.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace itinf {

struct EnumState : LearnerState {
  std::shared_ptr<const std::vector<Datum>> data;
  Nat cursor;
};

// Full-information learner: its state keeps the whole prefix. The cursor
// only moves forward because a refuted index stays refuted.
class EnumerationLearner : public IterativeLearner {
 public:
  explicit EnumerationLearner(std::shared_ptr<const IndexedFamily> family,
                              std::uint64_t budget = 2000000)
      : family_(std::move(family)), budget_(budget) {}
  std::string name() const override { return "enumeration"; }
  Hypothesis init() const override;
  Hypothesis step(const Hypothesis& h, const Datum& d) const override;

 private:
  Hypothesis make(std::shared_ptr<const std::vector<Datum>> data, Nat cursor) const;
  std::shared_ptr<const IndexedFamily> family_;
  std::uint64_t budget_;
};

// Non-owning handle to a registered fixture family.
std::shared_ptr<const IndexedFamily> fixture_handle(const std::string& name);

}  // namespace itinf
