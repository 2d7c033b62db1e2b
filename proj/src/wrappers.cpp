#include "itinf/wrappers.hpp"

#include "itinf/error.hpp"
#include "itinf/fixture_learners.hpp"
#include "itinf/fixtures.hpp"

namespace itinf {
namespace {

Hypothesis step_inner(const IterativeLearner& m, const Hypothesis& h, const Datum& d) {
  try {
    return m.step(h, d);
  } catch (const Error& e) {
    throw Error(Errc::UnderlyingLearnerUndefined, std::string("wrapped learner failed: ") + e.what());
  }
}

Hypothesis canny_hypothesis(std::shared_ptr<const CannyState> s) {
  Hypothesis h;
  h.id = "canny:" + short_id(s->sigma);
  h.semantics = s->inner.semantics;
  h.mode = s->inner.mode;
  h.lock_dist_sq = s->inner.lock_dist_sq;
  h.state = std::move(s);
  return h;
}

Hypothesis witness_hypothesis(std::shared_ptr<const WitnessState> s) {
  Hypothesis h;
  std::string mc;
  std::set<IntVec> ps, ns;
  for (const auto& d : s->mc) {
    mc += to_string(d);
    (d.label ? ps : ns).insert(d.point);
  }
  h.id = "wb:" + short_id(s->inner.id + "|" + mc);
  h.semantics = s->mc.empty() ? s->inner.semantics
                              : Language::patched(s->inner.semantics, std::move(ps), std::move(ns));
  h.mode = s->inner.mode;
  h.lock_dist_sq = s->inner.lock_dist_sq;
  h.state = std::move(s);
  return h;
}

}  // namespace

Hypothesis CannyWrap::init() const {
  auto s = std::make_shared<CannyState>();
  s->inner = m_->init();
  s->points = std::make_shared<const std::set<IntVec>>();
  return canny_hypothesis(std::move(s));
}

Hypothesis CannyWrap::step(const Hypothesis& h, const Datum& d) const {
  const auto& s = state_as<CannyState>(h);
  if (s.points->count(d.point)) return h;
  Hypothesis next = step_inner(*m_, s.inner, d);
  if (next.id == s.inner.id) return h;
  auto ns = std::make_shared<CannyState>();
  ns->inner = std::move(next);
  auto pts = std::make_shared<std::set<IntVec>>(*s.points);
  pts->insert(d.point);
  ns->points = std::move(pts);
  ns->sigma = s.sigma + to_string(d);
  return canny_hypothesis(std::move(ns));
}

Hypothesis WitnessWrap::init() const {
  auto s = std::make_shared<WitnessState>();
  s->inner = m_->init();
  return witness_hypothesis(std::move(s));
}

Hypothesis WitnessWrap::step(const Hypothesis& h, const Datum& d) const {
  const auto& s = state_as<WitnessState>(h);
  if (s.mc.count(d)) return h;
  Hypothesis next = step_inner(*m_, s.inner, d);
  if (next.id == s.inner.id) return h;
  auto ns = std::make_shared<WitnessState>();
  ns->inner = std::move(next);
  ns->mc = s.mc;
  ns->mc.insert(d);
  return witness_hypothesis(std::move(ns));
}

Hypothesis fixture_hypothesis(const std::string& family, const Nat& index) {
  Hypothesis h;
  h.id = family + ":" + short_id(index.str());
  h.semantics = Language::fixture(family, index);
  h.mode = "fixture";
  auto st = std::make_shared<IndexState>();
  st->index = index;
  h.state = std::move(st);
  return h;
}

Hypothesis CoSingletonLearner::init() const { return fixture_hypothesis("cosingleton", 0); }

Hypothesis CoSingletonLearner::step(const Hypothesis& h, const Datum& d) const {
  const Nat& i = state_as<IndexState>(h).index;
  auto x = point_nat(d.point);
  if (i != 0 || d.label != 0 || !x) return h;
  return fixture_hypothesis("cosingleton", cosingleton_index(*x));
}

Hypothesis FinLearner::init() const { return fixture_hypothesis("fin", fin_index({})); }

Hypothesis FinLearner::step(const Hypothesis& h, const Datum& d) const {
  const Nat& i = state_as<IndexState>(h).index;
  auto x = point_nat(d.point);
  if (d.label != 1 || !x || i == 0 || in_set_bits(i - 1, *x)) return h;
  Nat mask = i - 1;
  boost::multiprecision::bit_set(mask, static_cast<unsigned>(*x));
  return fixture_hypothesis("fin", mask + 1);
}

}  // namespace itinf
