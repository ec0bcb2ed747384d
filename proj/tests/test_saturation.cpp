#include <gtest/gtest.h>

#include <random>

#include "bowtie/constructions.hpp"
#include "bowtie/error.hpp"
#include "bowtie/saturation.hpp"
#include "helpers.hpp"

using namespace bowtie;
using testing_helpers::ks;
using testing_helpers::make;

TEST(CreatesBowtie, Examples) {
  const Hypergraph h(8, 4, {ks({1, 2, 3, 4})});
  EXPECT_TRUE(creates_bowtie(h, ks({4, 5, 6, 7})));
  EXPECT_FALSE(creates_bowtie(h, ks({1, 2, 3, 5})));
  EXPECT_THROW(creates_bowtie(h, ks({1, 2, 3, 4})), InputError);
}

TEST(CreatesBowtie, EveryMissingSetOfFanoComplement) {
  const auto fp = fano_complement();
  int missing = 0;
  for_each_kset(7, 4, [&](const KSet& s) {
    if (fp.contains(s)) return true;
    ++missing;
    EXPECT_TRUE(creates_bowtie(fp, s)) << s.to_string();
    return true;
  });
  EXPECT_EQ(missing, 28);
}

TEST(SemiSaturated, Examples) {
  EXPECT_TRUE(is_semi_saturated(complete(4, 4)));
  const Hypergraph single(7, 4, {ks({1, 2, 3, 4})});
  EXPECT_EQ(find_unsaturated_kset(single), ks({1, 2, 3, 5}));
  EXPECT_TRUE(is_semi_saturated(wsat4_construction(56)));
}

TEST(Saturated, Examples) {
  EXPECT_TRUE(is_saturated(fano_complement()));
  EXPECT_TRUE(is_saturated(disjoint_union(complete(4, 4), complete(5, 4))));
  const auto sharp = sharpcon(load_graph(BOWTIE_FIXTURE_DIR "/hog50403.el"));
  const auto r = check_saturation(sharp.hypergraph);
  EXPECT_FALSE(r.saturated());
  EXPECT_FALSE(r.bowtie_free());
  EXPECT_TRUE(r.semi_saturated());
}

TEST(Saturation, AgreesWithOracleOnRandomInstances) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int k = 2 + t % 3;
    const int n = k + 2 + static_cast<int>(rng() % 4);
    const auto edges = t % 2 == 0 ? oracle::random_edges(rng, n, k, 0.2) : oracle::random_saturated(rng, n, k);
    const Hypergraph h = make(n, k, edges);
    const auto r = check_saturation(h);
    EXPECT_EQ(r.bowtie_free(), oracle::bowtie_free(edges));
    EXPECT_EQ(r.semi_saturated(), oracle::semi_saturated(n, k, edges));
    EXPECT_EQ(r.saturated(), oracle::saturated(n, k, edges));
    if (r.saturated()) {
      EXPECT_TRUE(r.semi_saturated());
    }
  }
}

TEST(Saturation, CounterexampleLeavesBowtieCountUnchanged) {
  std::mt19937 rng(77);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 7 + t % 3;
    const Hypergraph h = make(n, 4, oracle::random_edges(rng, n, 4, 0.04));
    const auto c = find_unsaturated_kset(h);
    if (!c) continue;
    ++checked;
    auto edges = h.edges();
    edges.push_back(*c);
    EXPECT_EQ(count_bowties(Hypergraph(n, 4, edges)), count_bowties(h));
  }
  EXPECT_GT(checked, 100);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form(7, 4, SatKind::sat).lower, 7);
  EXPECT_TRUE(closed_form(7, 4, SatKind::sat).exact);
  EXPECT_EQ(closed_form(12, 4, SatKind::sat).lower, 9);
  EXPECT_EQ(closed_form(7, 3, SatKind::sat).lower, 5);
  EXPECT_EQ(closed_form(8, 3, SatKind::sat).lower, 4);
  EXPECT_EQ(closed_form(9, 3, SatKind::sat).lower, 3);
  EXPECT_EQ(closed_form(9, 2, SatKind::sat).lower, 4);
  EXPECT_EQ(closed_form(6, 4, SatKind::sat).lower, 15);
  EXPECT_EQ(closed_form(9, 4, SatKind::sat).lower, 6);
  EXPECT_EQ(closed_form(2, 3, SatKind::sat).lower, 0);
}

TEST(ClosedForm, SemiSaturation) {
  const auto exact = closed_form(108, 4, SatKind::wsat);
  EXPECT_TRUE(exact.exact);
  EXPECT_EQ(exact.lower, 49);
  const auto interval = closed_form(110, 4, SatKind::wsat);
  EXPECT_FALSE(interval.exact);
  EXPECT_EQ(interval.lower, 50);  // ceil((660 - 11) / 13)
  EXPECT_LE(interval.lower, interval.upper);
  const auto small = closed_form(56, 4, SatKind::wsat);
  EXPECT_FALSE(small.exact);
  EXPECT_EQ(small.upper, 25);
  EXPECT_EQ(closed_form(5, 4, SatKind::wsat).lower, 5);
  for (int n = 7; n <= 130; ++n) {
    const auto c = closed_form(n, 4, SatKind::wsat);
    EXPECT_LE(c.lower, c.upper) << n;
    EXPECT_LE(c.upper, closed_form(n, 4, SatKind::sat).lower) << n;
  }
}

TEST(ClosedForm, UnsupportedIsReported) {
  EXPECT_THROW(closed_form(10, 5, SatKind::sat), Unsupported);
  EXPECT_THROW(closed_form(0, 3, SatKind::sat), InputError);
}

TEST(ClosedForm, SmallUniformitiesCoincide) {
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(closed_form(n, 2, SatKind::wsat).lower, closed_form(n, 2, SatKind::sat).lower);
    if (n >= 3) {
      EXPECT_EQ(closed_form(n, 3, SatKind::wsat).lower, closed_form(n, 3, SatKind::sat).lower);
    }
  }
}

TEST(SatKind, Parse) {
  EXPECT_EQ(parse_sat_kind("sat"), SatKind::sat);
  EXPECT_EQ(parse_sat_kind("wsat"), SatKind::wsat);
  EXPECT_THROW(parse_sat_kind("other"), InputError);
}
