#include "itinf/error.hpp"
#include "itinf/fixture_learners.hpp"
#include "itinf/fixtures.hpp"
#include "itinf/hs_learner.hpp"
#include "itinf/run.hpp"
#include "itinf/validators.hpp"
#include "itinf/wrappers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace itinf;

namespace {

std::shared_ptr<const IterativeLearner> general2() { return std::make_shared<const HsLearner>(2); }

// Feeds data to a learner and records the hypothesis sequence.
HypSeq record(const IterativeLearner& m, const std::vector<Datum>& data, std::size_t dim) {
  HypSeq q;
  q.dim = dim;
  Hypothesis h = m.init();
  q.ids.push_back(h.id);
  q.sems.push_back(h.semantics);
  for (const auto& d : data) {
    h = m.step(h, d);
    q.ids.push_back(h.id);
    q.sems.push_back(h.semantics);
    q.data.push_back(d);
  }
  return q;
}

// Informant for a fixture language over 0..n-1 in a seeded order.
std::vector<Datum> fixture_informant(const std::string& family, const Nat& index, int n, std::uint64_t seed) {
  const auto& f = fixture_family(family);
  std::vector<Datum> data;
  for (int x = 0; x < n; ++x) data.push_back({nat_point(x), f.member(index, nat_point(x)) ? 1 : 0});
  std::mt19937_64 rng(seed);
  std::shuffle(data.begin(), data.end(), rng);
  return data;
}

StreamSpec spec_for(long a1, long a2, long b, int seed) {
  StreamSpec s;
  s.target = {make_vec({a1, a2}), Int(b)};
  s.kind = StreamKind::Permuted;
  s.seed = static_cast<std::uint64_t>(seed);
  return s;
}

}  // namespace

TEST(Canny, NoDatumChangesTheMindTwice) {
  CannyWrap m(general2());
  for (int seed = 0; seed < 10; ++seed) {
    StreamSpec s = spec_for(2, -3, 1, seed);
    s.kind = StreamKind::RepeatHeavy;
    s.repeat = 2;
    RunResult r = run(m, s, {3000, 50});
    EXPECT_EQ(r.status, RunStatus::Converged);
    EXPECT_EQ(validate(r.trace, Restriction::Canny).kind, Verdict::Pass);
  }
}

TEST(Canny, ImmediateRepeatIsIgnored) {
  CannyWrap m(general2());
  Hypothesis h = m.init();
  Datum d{make_vec({0, 0}), 1};
  Hypothesis a = m.step(h, d);
  EXPECT_NE(a.id, h.id);
  EXPECT_EQ(m.step(a, d).id, a.id);
}

TEST(Canny, SameLimitAsUnwrapped) {
  CannyWrap wrapped(general2());
  HsLearner plain(2);
  for (auto [a1, a2, b] : std::vector<std::array<long, 3>>{{0, 1, 0}, {1, 2, -1}, {-3, 1, 2}, {4, -3, 0}, {1, 1, 3}})
    for (int seed = 0; seed < 20; ++seed) {
      StreamSpec s = spec_for(a1, a2, b, seed);
      RunResult rw = run(wrapped, s, {3000, 50});
      RunResult rp = run(plain, s, {3000, 50});
      ASSERT_EQ(rw.status, RunStatus::Converged);
      ASSERT_EQ(rp.status, RunStatus::Converged);
      EXPECT_EQ(std::get<HalfSpace>(rw.trace.steps.back().hyp.semantics.node),
                std::get<HalfSpace>(rp.trace.steps.back().hyp.semantics.node));
    }
}

TEST(Witness, InnerFailureIsReported) {
  WitnessWrap m(general2());
  Hypothesis h = m.step(m.init(), {make_vec({0, 0}), 1});
  try {
    m.step(h, {make_vec({0, 0}), 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnderlyingLearnerUndefined);
  }
}

TEST(Witness, EmptyMindChangeSetKeepsSemantics) {
  auto inner = general2();
  WitnessWrap m(inner);
  EXPECT_EQ(to_json(m.init().semantics), to_json(inner->init().semantics));
}

TEST(Witness, MindChangeDatumIsForced) {
  auto inner = std::make_shared<const FinLearner>();
  WitnessWrap m(inner);
  Hypothesis h = m.step(m.init(), {nat_point(5), 1});
  EXPECT_TRUE(member(h.semantics, nat_point(5)));
  // The cosingleton learner drops x from N; the patch keeps the datum's label.
  WitnessWrap c(std::make_shared<const CoSingletonLearner>());
  Hypothesis g = c.step(c.init(), {nat_point(3), 0});
  EXPECT_FALSE(member(g.semantics, nat_point(3)));
  EXPECT_TRUE(member(g.semantics, nat_point(4)));
}

TEST(Witness, PatchedSemanticsOverrideBase) {
  Language base = Language::halfspace({make_vec({0, 1}), 0});
  Language l = Language::patched(base, {make_vec({0, -5})}, {make_vec({2, 2})});
  EXPECT_TRUE(member(l, make_vec({0, -5})));
  EXPECT_FALSE(member(l, make_vec({2, 2})));
  EXPECT_TRUE(member(l, make_vec({1, 1})));
  EXPECT_FALSE(member(l, make_vec({1, -1})));
}

TEST(Witness, WitnessBasedWhereBaseIsLocallyConservative) {
  struct Case {
    std::shared_ptr<const IterativeLearner> m;
    std::string family;
    Nat index;
  };
  std::vector<Case> cases{{std::make_shared<const FinLearner>(), "fin", fin_index({1, 2, 7})},
                          {std::make_shared<const CoSingletonLearner>(), "cosingleton", cosingleton_index(4)}};
  int runs = 0;
  for (const auto& c : cases)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto data = fixture_informant(c.family, c.index, 30, seed);
      HypSeq base = record(*c.m, data, 1);
      ASSERT_EQ(validate(base, Restriction::LocConv).kind, Verdict::Pass);
      HypSeq wrapped = record(WitnessWrap(c.m), data, 1);
      EXPECT_EQ(validate(wrapped, Restriction::Wb).kind, Verdict::Pass);
      ++runs;
    }
  EXPECT_EQ(runs, 20);
}

TEST(Witness, ConvergesOnHalfSpaces) {
  WitnessWrap m(general2());
  for (int seed = 0; seed < 5; ++seed) {
    RunResult r = run(m, spec_for(1, -2, 1, seed), {3000, 50});
    EXPECT_EQ(r.status, RunStatus::Converged);
  }
}

TEST(FixtureLearners, LearnTheirTargets) {
  auto data = fixture_informant("fin", fin_index({1, 2}), 20, 3);
  HypSeq q = record(FinLearner(), data, 1);
  EXPECT_EQ(exact_key(q.sems.back()), exact_key(Language::fixture("fin", fin_index({1, 2}))));
  data = fixture_informant("cosingleton", cosingleton_index(6), 20, 3);
  q = record(CoSingletonLearner(), data, 1);
  EXPECT_EQ(exact_key(q.sems.back()), exact_key(Language::fixture("cosingleton", cosingleton_index(6))));
}
