#include "itinf/error.hpp"
#include "itinf/hs_learner.hpp"
#include "itinf/oracles.hpp"
#include "itinf/run.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace itinf;

namespace {

Datum P(long x, long y) { return {make_vec({x, y}), 1}; }
Datum N(long x, long y) { return {make_vec({x, y}), 0}; }

// Random consistent data: n distinct box points labeled by a random target,
// drawn within `band` of its boundary so that locks are common.
std::vector<Datum> labeled_sample(std::mt19937_64& rng, std::size_t d, long box, std::size_t n,
                                  long band = 1000) {
  std::uniform_int_distribution<long> c(-box, box), a(-3, 3);
  IntVec normal;
  do {
    normal.clear();
    for (std::size_t k = 0; k < d; ++k) normal.push_back(a(rng));
  } while (gcd_vec(normal) != 1);
  HalfSpace target{normal, Int(c(rng) / 2)};
  std::set<IntVec> pts;
  while (pts.size() < n) {
    IntVec p;
    for (std::size_t k = 0; k < d; ++k) p.push_back(c(rng));
    if (abs(dot(normal, p) + target.offset) <= band) pts.insert(p);
  }
  std::vector<Datum> data;
  for (const auto& p : pts) data.push_back({p, hs_member(target, p) ? 1 : 0});
  std::shuffle(data.begin(), data.end(), rng);
  return data;
}

HsLearnerState locked_on_x_axis() {
  HsLearnerState s = hs_learner_initial(2);
  for (const auto& d : {P(0, 0), P(1, 0), N(0, -1), N(1, -1)}) s = hs_learner_step(s, d);
  return s;
}

}  // namespace

TEST(FindLock, UniqueCandidate) {
  auto lock = find_lock({P(0, 0), P(1, 0), N(0, 1), N(1, 1)}, 2);
  ASSERT_TRUE(lock.has_value());
  EXPECT_EQ(lock->cplus, (BasicSet{make_vec({0, 0}), make_vec({1, 0})}));
  EXPECT_EQ(lock->cminus, (BasicSet{make_vec({0, 1}), make_vec({1, 1})}));
  EXPECT_EQ(lock->plus, (HalfSpace{make_vec({0, -1}), 0}));
  EXPECT_EQ(lock->minus, (HalfSpace{make_vec({0, 1}), -1}));
  auto ref = lock_oracle({P(0, 0), P(1, 0), N(0, 1), N(1, 1)}, 2);
  ASSERT_TRUE(ref.has_value());
  EXPECT_EQ(ref->cplus, lock->cplus);
}

TEST(FindLock, TooFewPoints) {
  EXPECT_FALSE(find_lock({P(0, 0), N(0, 1)}, 2).has_value());
}

TEST(FindLock, PositiveBeyondTheLine) {
  std::vector<Datum> data{P(0, 0), P(1, 0), N(0, 1), N(1, 1), P(5, 2)};
  EXPECT_FALSE(find_lock(data, 2).has_value());
  EXPECT_FALSE(lock_oracle(data, 2).has_value());
}

TEST(FindLock, AgreesWithOracleInTwoDimensions) {
  std::mt19937_64 rng(2024);
  int locks = 0;
  for (int it = 0; it < 200; ++it) {
    auto data = labeled_sample(rng, 2, 5, 4 + it % 9, 2);
    auto got = find_lock(data, 2);
    auto ref = lock_oracle(data, 2);
    ASSERT_EQ(got.has_value(), ref.has_value()) << it;
    if (!got) continue;
    ++locks;
    EXPECT_EQ(got->cplus, ref->cplus);
    EXPECT_EQ(got->cminus, ref->cminus);
    EXPECT_EQ(got->plus, ref->plus);
    EXPECT_EQ(got->minus, ref->minus);
  }
  EXPECT_GT(locks, 20);
}

TEST(FindLock, AgreesWithOracleInThreeDimensions) {
  std::mt19937_64 rng(77);
  int locks = 0;
  for (int it = 0; it < 120; ++it) {
    auto data = labeled_sample(rng, 3, 1, 6 + it % 7);
    auto got = find_lock(data, 3);
    auto ref = lock_oracle(data, 3);
    ASSERT_EQ(got.has_value(), ref.has_value()) << it;
    if (!got) continue;
    ++locks;
    EXPECT_EQ(got->cplus, ref->cplus);
    EXPECT_EQ(got->cminus, ref->cminus);
    EXPECT_EQ(got->plus, ref->plus);
  }
  EXPECT_GT(locks, 5);
}

TEST(FindLock, LockSeparatesAllData) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 200; ++it) {
    auto data = labeled_sample(rng, 2, 6, 12);
    auto lock = find_lock(data, 2);
    if (!lock) continue;
    for (const auto& d : data) {
      EXPECT_EQ(hs_member(lock->plus, d.point), d.label == 1);
      EXPECT_EQ(hs_member(lock->minus, d.point), d.label == 0);
    }
    for (const auto& p : lock->cplus) EXPECT_EQ(dot(lock->plus.normal, p) + lock->plus.offset, 0);
    for (const auto& q : lock->cminus) EXPECT_EQ(dot(lock->minus.normal, q) + lock->minus.offset, 0);
  }
}

TEST(FindLock, TranslationInvariantPastSmallCoordinates) {
  // A shift by a lattice vector moves coordinates out of the int64 fast path
  // and preserves both the candidate order and the lock.
  std::mt19937_64 rng(8);
  for (std::size_t d : {2u, 3u}) {
    IntVec shift = d == 2 ? make_vec({10000, -7000}) : make_vec({5000, -9000, 123456});
    int found = 0;
    for (int it = 0; it < 250; ++it) {
      auto data = labeled_sample(rng, d, d == 2 ? 4 : 1, d == 2 ? 12 : 10, 2);
      auto moved = data;
      for (auto& x : moved)
        for (std::size_t k = 0; k < d; ++k) x.point[k] += shift[k];
      auto a = find_lock(data, d);
      auto b = find_lock(moved, d);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (!a) continue;
      ++found;
      for (std::size_t i = 0; i < d; ++i) {
        IntVec p = a->cplus[i], q = a->cminus[i];
        for (std::size_t k = 0; k < d; ++k) p[k] += shift[k], q[k] += shift[k];
        EXPECT_EQ(b->cplus[i], p);
        EXPECT_EQ(b->cminus[i], q);
      }
      EXPECT_EQ(b->plus.normal, a->plus.normal);
      EXPECT_EQ(b->plus.offset, a->plus.offset - dot(a->plus.normal, shift));
    }
    EXPECT_GT(found, 5) << "d=" << d;
  }
}

TEST(FindLock, InconsistentDataRejected) {
  EXPECT_THROW(find_lock({P(0, 0), N(0, 0)}, 2), Error);
}

TEST(HsLearnerStep, LockedIgnoresConsistentDatum) {
  HsLearnerState s = locked_on_x_axis();
  ASSERT_TRUE(s.locked);
  EXPECT_EQ(s.lock.plus, (HalfSpace{make_vec({0, 1}), 0}));
  HsLearnerState t = hs_learner_step(s, P(7, 3));
  EXPECT_TRUE(t.locked);
  EXPECT_EQ(t.lock.cplus, s.lock.cplus);
  EXPECT_EQ(t.lock.cminus, s.lock.cminus);
}

TEST(HsLearnerStep, ViolationReopensWithFivePoints) {
  HsLearnerState t = hs_learner_step(locked_on_x_axis(), P(7, -3));
  EXPECT_FALSE(t.locked);
  EXPECT_EQ(t.retained.size(), 5u);
  ASSERT_TRUE(t.pending.has_value());
  EXPECT_EQ(*t.pending, P(7, -3));
}

TEST(HsLearnerStep, CompletingDatumLocks) {
  HsLearnerState s = hs_learner_initial(2);
  for (const auto& d : {P(0, 0), P(1, 0), N(0, 1)}) {
    s = hs_learner_step(s, d);
    EXPECT_FALSE(s.locked);
  }
  s = hs_learner_step(s, N(1, 1));
  ASSERT_TRUE(s.locked);
  auto ref = find_lock({P(0, 0), P(1, 0), N(0, 1), N(1, 1)}, 2);
  EXPECT_EQ(s.lock.cplus, ref->cplus);
}

TEST(HsLearnerStep, InconsistentDatum) {
  HsLearnerState s = hs_learner_step(hs_learner_initial(2), P(0, 0));
  try {
    hs_learner_step(s, N(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InconsistentDatum);
  }
  EXPECT_THROW(hs_learner_step(locked_on_x_axis(), N(0, 0)), Error);
}

TEST(HsLearnerHypothesis, LockedDenotesPositiveTangent) {
  HsLearnerState s = hs_learner_initial(2);
  for (const auto& d : {P(0, 0), P(1, 0), N(0, 1), N(1, 1)}) s = hs_learner_step(s, d);
  Hypothesis h = hs_learner_hypothesis(std::make_shared<const HsLearnerState>(s));
  EXPECT_EQ(h.mode, "locked");
  EXPECT_EQ(std::get<HalfSpace>(h.semantics.node), (HalfSpace{make_vec({0, -1}), 0}));
  ASSERT_TRUE(h.lock_dist_sq.has_value());
  EXPECT_EQ(*h.lock_dist_sq, 1);
}

TEST(HsLearnerHypothesis, OpenStates) {
  HsLearner m(3);
  Hypothesis h0 = m.init();
  EXPECT_EQ(h0.mode, "open");
  EXPECT_EQ(h0.id, "open:");
  EXPECT_EQ(std::get<HalfSpace>(h0.semantics.node), (HalfSpace{make_vec({0, 0, 1}), 0}));
  EXPECT_FALSE(h0.lock_dist_sq.has_value());
  Hypothesis a = m.step(h0, {make_vec({0, 0, 0}), 1});
  Hypothesis b = m.step(h0, {make_vec({1, 0, 0}), 1});
  EXPECT_NE(a.id, b.id);
  EXPECT_EQ(to_json(a.semantics), to_json(b.semantics));
  EXPECT_EQ(m.step(a, {make_vec({0, 0, 0}), 1}).id, a.id);
}

TEST(HsLearnerRun, ConvergesOnUpperHalfPlane) {
  StreamSpec spec;
  spec.target = {make_vec({0, 1}), 0};
  RunResult r = run(HsLearner(2), spec, {2000, 50});
  ASSERT_EQ(r.status, RunStatus::Converged);
  EXPECT_TRUE(hs_equal(std::get<HalfSpace>(r.trace.steps.back().hyp.semantics.node), spec.target));
}

// Lock distances fall strictly, stay above the target gap, and the number of
// locks stays within the count of primitive normals no longer than the target's.
TEST(HsLearnerRun, TraceLawsOnSweep) {
  HsLearner m(2);
  int runs = 0;
  for (long a1 = -3; a1 <= 3; ++a1)
    for (long a2 = -3; a2 <= 3; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      for (long b : {-2L, 0L, 3L})
        for (int seed = -1; seed < 3; ++seed) {
          StreamSpec spec;
          spec.target = {make_vec({a1, a2}), Int(b)};
          if (seed >= 0) {
            spec.kind = StreamKind::Permuted;
            spec.seed = static_cast<std::uint64_t>(seed);
          }
          RunResult r = run(m, spec, {3000, 50});
          ++runs;
          ASSERT_EQ(r.status, RunStatus::Converged);
          Rat gap = min_parallel_distance_sq(spec.target.normal);
          std::vector<Rat> dists;
          std::string prev;
          for (const auto& s : r.trace.steps) {
            if (s.hyp.mode == "locked" && s.hyp.id != prev) dists.push_back(*s.hyp.lock_dist_sq);
            prev = s.hyp.id;
          }
          for (std::size_t i = 1; i < dists.size(); ++i) EXPECT_LT(dists[i], dists[i - 1]);
          for (const auto& x : dists) EXPECT_GE(x, gap);
          EXPECT_LE(r.locks, primitive_count_within(2, a1 * a1 + a2 * a2));
          EXPECT_EQ(r.locks, dists.size());
        }
    }
  EXPECT_GT(runs, 300);
}

TEST(HsLearnerRun, IterativeReplay) {
  // Whenever two runs present the same datum to the same hypothesis, the
  // outputs agree.
  HsLearner m(2);
  std::map<std::pair<std::string, Datum>, std::string> seen;
  for (int seed = 0; seed < 12; ++seed) {
    StreamSpec spec;
    spec.target = {make_vec({1, 2}), -1};
    spec.kind = seed % 2 ? StreamKind::Permuted : StreamKind::RepeatHeavy;
    spec.seed = static_cast<std::uint64_t>(seed);
    spec.repeat = 2;
    Stream st(spec);
    Hypothesis h = m.init();
    for (std::uint64_t t = 0; t < 120; ++t) {
      Datum d = st.at(t);
      Hypothesis next = m.step(h, d);
      auto [it, fresh] = seen.emplace(std::make_pair(h.id, d), next.id);
      if (!fresh) EXPECT_EQ(it->second, next.id);
      h = next;
    }
  }
}

TEST(HsLearnerRun, ThreeDimensions) {
  StreamSpec spec;
  spec.target = {make_vec({1, -2, 1}), 1};
  RunResult r = run(HsLearner(3), spec, {5000, 100});
  EXPECT_EQ(r.status, RunStatus::Converged);
}

TEST(PrimitiveCount, SmallValues) {
  EXPECT_EQ(primitive_count_within(2, 1), 4u);
  EXPECT_EQ(primitive_count_within(2, 2), 8u);
  EXPECT_EQ(primitive_count_within(3, 1), 6u);
}
