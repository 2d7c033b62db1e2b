#include "itinf/error.hpp"
#include "itinf/fixtures.hpp"
#include "itinf/streams.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace itinf;

namespace {

Int max_norm(const IntVec& p) {
  Int m = 0;
  for (const auto& c : p) m = std::max(m, Int(abs(c)));
  return m;
}

StreamSpec spec_of(StreamKind k, std::uint64_t seed = 0) {
  StreamSpec s;
  s.target = {make_vec({1, -2}), 1};
  s.kind = k;
  s.seed = seed;
  return s;
}

std::vector<Datum> prefix(const StreamSpec& s, std::uint64_t n) {
  Stream st(s);
  std::vector<Datum> out;
  for (std::uint64_t t = 0; t < n; ++t) out.push_back(st.at(t));
  return out;
}

}  // namespace

TEST(Content, PosNegSplit) {
  InformantPrefix s{{make_vec({0, 0}), 1}, {make_vec({0, 1}), 0}};
  EXPECT_EQ(pos(s), (std::set<IntVec>{make_vec({0, 0})}));
  EXPECT_EQ(neg(s), (std::set<IntVec>{make_vec({0, 1})}));
  EXPECT_TRUE(pos({}).empty());
  EXPECT_TRUE(content({}).empty());
  InformantPrefix r = s;
  r.push_back(s[0]);
  EXPECT_EQ(content(r), content(s));
}

TEST(Content, InconsistentPrefix) {
  InformantPrefix s{{make_vec({0, 0}), 1}, {make_vec({0, 0}), 0}};
  try {
    content(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Inconsistent);
  }
}

TEST(Consistency, Examples) {
  HalfSpace y{make_vec({0, 1}), 0};
  EXPECT_TRUE(consistent_with(InformantPrefix{{make_vec({0, 0}), 1}}, y));
  EXPECT_FALSE(consistent_with(InformantPrefix{{make_vec({0, -1}), 1}}, y));
  InformantPrefix can;
  HalfSpace l{make_vec({3, -2}), 1};
  for (std::uint64_t t = 0; t < 50; ++t) can.push_back(canonical_informant(l, t));
  EXPECT_TRUE(consistent_with(can, l));
}

TEST(Canonical, StartsAtOrigin) {
  HalfSpace l{make_vec({0, 1}), -1};
  Datum d = canonical_informant(l, 0);
  EXPECT_EQ(d.point, make_vec({0, 0}));
  EXPECT_EQ(d.label, 0);
}

TEST(Canonical, ShellsCoverBoxes) {
  std::set<IntVec> first9;
  for (std::uint64_t t = 0; t < 9; ++t) first9.insert(canonical_point(2, t));
  std::set<IntVec> box;
  for (long x = -1; x <= 1; ++x)
    for (long y = -1; y <= 1; ++y) box.insert(make_vec({x, y}));
  EXPECT_EQ(first9, box);
  std::set<IntVec> first49;
  for (std::uint64_t t = 0; t < 49; ++t) first49.insert(canonical_point(2, t));
  EXPECT_EQ(first49.size(), 49u);
  for (const auto& p : first49) EXPECT_LE(max_norm(p), 3);
}

TEST(Canonical, BijectionOnPrefix) {
  for (std::size_t d = 1; d <= 3; ++d) {
    std::set<IntVec> seen;
    for (std::uint64_t t = 0; t < 10000; ++t) {
      IntVec p = canonical_point(d, t);
      EXPECT_TRUE(seen.insert(p).second);
      EXPECT_EQ(canonical_position(p), t);
    }
  }
}

TEST(Generate, PermutedIsDeterministic) {
  auto s = spec_of(StreamKind::Permuted, 42);
  EXPECT_EQ(prefix(s, 300), prefix(s, 300));
  EXPECT_NE(prefix(s, 300), prefix(spec_of(StreamKind::Permuted, 43), 300));
  EXPECT_EQ(generate(s, 17), prefix(s, 18).back());
}

TEST(Generate, PermutedKeepsShells) {
  auto s = spec_of(StreamKind::Permuted, 5);
  auto p = prefix(s, 49);
  std::set<IntVec> pts;
  for (const auto& d : p) pts.insert(d.point);
  EXPECT_EQ(pts.size(), 49u);
  for (const auto& q : pts) EXPECT_LE(max_norm(q), 3);
}

TEST(Generate, RepeatHeavyHasSameContent) {
  auto s = spec_of(StreamKind::RepeatHeavy, 3);
  s.repeat = 3;
  auto p = prefix(s, 400);
  std::vector<Datum> fresh;
  std::set<IntVec> seen;
  for (const auto& d : p)
    if (seen.insert(d.point).second) fresh.push_back(d);
  EXPECT_EQ(pos(p), pos(fresh));
  EXPECT_EQ(neg(p), neg(fresh));
  EXPECT_EQ(fresh.size(), 100u);
}

TEST(Generate, WithholdDelaysPoint) {
  auto s = spec_of(StreamKind::Withhold);
  s.withheld = make_vec({0, 0});
  s.withhold_at = 30;
  auto p = prefix(s, 60);
  for (std::uint64_t t = 0; t < 30; ++t) EXPECT_NE(p[t].point, s.withheld);
  EXPECT_EQ(p[30].point, s.withheld);
  std::set<IntVec> pts;
  for (const auto& d : p) pts.insert(d.point);
  EXPECT_EQ(pts.size(), 60u);
}

TEST(Generate, InvalidSpecs) {
  auto s = spec_of(StreamKind::Withhold);
  s.withheld = make_vec({3, 3});
  s.withhold_at = 2;
  EXPECT_THROW(validate(s), Error);
  s.withheld = make_vec({1});
  s.withhold_at = 100;
  EXPECT_THROW(validate(s), Error);
  auto r = spec_of(StreamKind::RepeatHeavy);
  r.repeat = 0;
  EXPECT_THROW(validate(r), Error);
}

TEST(Generate, EveryKindIsConsistentAndSurjective) {
  for (auto kind : {StreamKind::Canonical, StreamKind::Permuted, StreamKind::RepeatHeavy}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto s = spec_of(kind, seed);
      s.repeat = 2;
      // Every point of max-norm <= 2 lies in the first 3 * 25 data.
      auto p = prefix(s, 75);
      EXPECT_TRUE(consistent_with(p, s.target));
      std::set<IntVec> pts;
      for (const auto& d : p) pts.insert(d.point);
      for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) EXPECT_TRUE(pts.count(make_vec({x, y})));
    }
  }
}

TEST(StreamKinds, NamesRoundTrip) {
  for (auto k : {StreamKind::Canonical, StreamKind::Permuted, StreamKind::RepeatHeavy, StreamKind::Withhold})
    EXPECT_EQ(parse_stream_kind(to_string(k)), k);
  EXPECT_FALSE(parse_stream_kind("shuffled").has_value());
}

TEST(BoolMap, Membership) {
  auto evens = [](const Nat& n) { return n % 2 == 0; };
  EXPECT_TRUE(bool_map_member(evens, 8));
  EXPECT_FALSE(bool_map_member(evens, 9));
  EXPECT_TRUE(bool_map_member(evens, 7));
}

TEST(BoolMap, InformantCases) {
  EXPECT_EQ(bool_map_informant({{4, 1}}), (std::vector<NatDatum>{{8, 1}, {9, 0}}));
  EXPECT_EQ(bool_map_informant({{3, 0}}), (std::vector<NatDatum>{{7, 1}, {6, 0}}));
  EXPECT_TRUE(bool_map_informant({}).empty());
  EXPECT_THROW(bool_map_informant({{3, 0}, {3, 1}}), Error);
}

TEST(BoolMap, InformantPartitionsEachPair) {
  std::vector<NatDatum> in;
  for (int n = 0; n < 40; ++n) in.push_back({n, n % 3 == 0 ? 1 : 0});
  auto out = bool_map_informant(in);
  ASSERT_EQ(out.size(), 2 * in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::set<Nat> both{out[2 * i].n, out[2 * i + 1].n};
    EXPECT_EQ(both, (std::set<Nat>{2 * in[i].n, 2 * in[i].n + 1}));
    EXPECT_NE(out[2 * i].label, out[2 * i + 1].label);
  }
  EXPECT_EQ(bool_map_decode_informant(out), in);
}

TEST(BoolMap, TextFormula) {
  EXPECT_EQ(bool_map_text({{4, 1}}), (std::vector<TextItem>{Nat(8)}));
  EXPECT_EQ(bool_map_text({{3, 0}}), (std::vector<TextItem>{Nat(7)}));
}

TEST(BoolMap, TextRoundTrip) {
  std::vector<NatDatum> in;
  for (int n = 0; n < 100; ++n) in.push_back({(n * 37) % 101, (n * 7) % 3 == 0 ? 1 : 0});
  EXPECT_EQ(bool_map_decode_text(bool_map_text(in)), in);
  EXPECT_TRUE(bool_map_decode_text({std::nullopt}).empty());
}

TEST(BoolMap, FixtureLanguages) {
  for (const auto& [fam, idx] : std::vector<std::pair<std::string, Nat>>{
           {"fin", fin_index({1, 2})}, {"cosingleton", cosingleton_index(3)}, {"lk", lk_index(2, true)}}) {
    const auto& f = fixture_family(fam);
    auto in = [&](const Nat& n) { return f.member(idx, nat_point(n)); };
    for (int n = 0; n <= 200; ++n) {
      EXPECT_EQ(bool_map_member(in, 2 * n), in(n));
      EXPECT_EQ(bool_map_member(in, 2 * n + 1), !in(n));
    }
  }
}
