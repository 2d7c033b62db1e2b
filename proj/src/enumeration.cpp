#include "itinf/enumeration.hpp"

#include "itinf/error.hpp"

namespace itinf {
namespace {

bool consistent(const Language& l, const std::vector<Datum>& data) {
  for (const auto& d : data)
    if (member(l, d.point) != (d.label == 1)) return false;
  return true;
}

}  // namespace

std::shared_ptr<const IndexedFamily> fixture_handle(const std::string& name) {
  return std::shared_ptr<const IndexedFamily>(&fixture_family(name), [](const IndexedFamily*) {});
}

Hypothesis EnumerationLearner::make(std::shared_ptr<const std::vector<Datum>> data, Nat cursor) const {
  Hypothesis h;
  h.id = "enum:" + short_id(cursor.str());
  h.semantics = family_->language(cursor);
  h.mode = "enum";
  auto s = std::make_shared<EnumState>();
  s->data = std::move(data);
  s->cursor = std::move(cursor);
  h.state = std::move(s);
  return h;
}

Hypothesis EnumerationLearner::init() const {
  Nat c = 0;
  std::uint64_t spent = 0;
  while (family_->degenerate(c)) {
    ++c;
    if (++spent > budget_) throw Error(Errc::BudgetExceeded, "enumeration budget exceeded");
  }
  return make(std::make_shared<const std::vector<Datum>>(), c);
}

Hypothesis EnumerationLearner::step(const Hypothesis& h, const Datum& d) const {
  const auto& s = state_as<EnumState>(h);
  auto data = std::make_shared<std::vector<Datum>>(*s.data);
  data->push_back(d);
  Nat c = s.cursor;
  bool ok = member(h.semantics, d.point) == (d.label == 1);
  std::uint64_t spent = 0;
  while (!ok) {
    ++c;
    if (++spent > budget_) throw Error(Errc::BudgetExceeded, "enumeration budget exceeded");
    if (family_->degenerate(c)) continue;
    ok = consistent(family_->language(c), *data);
  }
  return make(std::move(data), std::move(c));
}

}  // namespace itinf
