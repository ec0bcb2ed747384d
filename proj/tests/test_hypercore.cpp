#include <gtest/gtest.h>

#include <random>

#include "bowtie/constructions.hpp"
#include "bowtie/error.hpp"
#include "bowtie/hypergraph.hpp"
#include "bowtie/saturation.hpp"
#include "helpers.hpp"

using namespace bowtie;
using testing_helpers::ks;
using testing_helpers::make;

TEST(KSet, RejectsBadInput) {
  EXPECT_THROW(KSet::from_elements({3, 2}, 5), InputError);
  EXPECT_THROW(KSet::from_elements({1, 1}, 5), InputError);
  EXPECT_THROW(KSet::from_elements({0, 2}, 5), InputError);
  EXPECT_THROW(KSet::from_elements({1, 6}, 5), InputError);
  EXPECT_NO_THROW(KSet::from_elements({1, 128}, 128));
}

TEST(KSet, ElementsAndText) {
  const KSet s = ks({2, 5, 9});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.elements(), (std::vector<int>{2, 5, 9}));
  EXPECT_EQ(s.to_string(), "{2,5,9}");
  EXPECT_EQ(s.max_element(), 9);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(ks({100, 127}).elements(), (std::vector<int>{100, 127}));
}

TEST(KSet, IntersectionExamples) {
  EXPECT_EQ(intersection_size(ks({1, 2, 3, 4}), ks({4, 5, 6, 7})), 1);
  EXPECT_EQ(intersection_size(ks({1, 2, 3, 4}), ks({1, 2, 3, 4})), 4);
  EXPECT_EQ(intersection_size(ks({1, 2, 3, 4}), ks({3, 4, 5, 6})), 2);
}

TEST(KSet, IntersectionSymmetric) {
  const auto all = oracle::subsets(8, 4);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const KSet a = KSet::from_elements(all[i], 8);
      const KSet b = KSet::from_elements(all[j], 8);
      EXPECT_EQ(intersection_size(a, b), intersection_size(b, a));
      EXPECT_EQ(intersection_size(a, b), oracle::meet(all[i], all[j]));
    }
    const KSet a = KSet::from_elements(all[i], 8);
    EXPECT_EQ(intersection_size(a, a), 4);
  }
}

TEST(KSet, ColexRankUnrankInverse) {
  for (int n : {1, 5, 9, 12}) {
    for (int k = 1; k <= n && k <= 5; ++k) {
      std::uint64_t expected = 0;
      for_each_kset(n, k, [&](const KSet& s) {
        EXPECT_EQ(colex_rank(s), expected);
        EXPECT_EQ(colex_unrank(expected, k), s);
        ++expected;
        return true;
      });
      EXPECT_EQ(expected, binomial(n, k));
    }
  }
}

TEST(KSet, ColexOrderIsMaskOrder) {
  std::vector<KSet> seen;
  for_each_kset(7, 3, [&](const KSet& s) {
    seen.push_back(s);
    return true;
  });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), ks({1, 2, 3}));
  EXPECT_EQ(seen[1], ks({1, 2, 4}));
  EXPECT_EQ(seen[2], ks({1, 3, 4}));
}

TEST(KSet, Binomial) {
  EXPECT_EQ(binomial(9, 4), 126u);
  EXPECT_EQ(binomial(56, 4), 367290u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(0, 0), 1u);
}

TEST(Hypergraph, Validation) {
  EXPECT_THROW(Hypergraph(3, 4), InputError);
  EXPECT_THROW(Hypergraph(5, 0), InputError);
  EXPECT_THROW(Hypergraph(7, 4, {ks({1, 2, 3})}), InputError);
  EXPECT_THROW(Hypergraph(7, 3, {ks({1, 2, 8})}), InputError);
  EXPECT_THROW(Hypergraph(7, 3, {ks({1, 2, 3}), ks({1, 2, 3})}), InputError);
  EXPECT_THROW(Hypergraph(129, 3), InputError);
  EXPECT_NO_THROW(Hypergraph(0, 4));
  const Hypergraph empty(5, 3);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_TRUE(is_bowtie_free(empty));
}

TEST(Hypergraph, Degrees) {
  const Hypergraph h(6, 3, {ks({1, 2, 3}), ks({3, 4, 5})});
  EXPECT_EQ(h.degree(3), 2);
  EXPECT_EQ(h.degree(1), 1);
  EXPECT_EQ(h.degree(6), 0);
  EXPECT_TRUE(h.contains(ks({3, 4, 5})));
  EXPECT_FALSE(h.contains(ks({3, 4, 6})));
}

TEST(Bowtie, Examples) {
  EXPECT_TRUE(is_bowtie_free(fano_complement()));
  const Hypergraph two(7, 4, {ks({1, 2, 3, 4}), ks({4, 5, 6, 7})});
  const auto w = find_bowtie(two);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first, ks({1, 2, 3, 4}));
  EXPECT_EQ(w->second, ks({4, 5, 6, 7}));
  EXPECT_EQ(count_bowties(two), 1u);
}

TEST(Bowtie, AgreesWithPairwiseDefinition) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 5 + t % 4;
    const auto edges = oracle::random_edges(rng, n, 3, 0.15);
    const Hypergraph h = make(n, 3, edges);
    EXPECT_EQ(is_bowtie_free(h), oracle::bowtie_free(edges));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) pairs += oracle::meet(edges[i], edges[j]) == 1 ? 1 : 0;
    EXPECT_EQ(count_bowties(h), pairs);
  }
}

TEST(Twins, Examples) {
  const auto h8 = sat4_construction(8);
  EXPECT_EQ(twin_pairs(h8), (std::vector<std::pair<int, int>>{{5, 6}, {7, 8}}));
  EXPECT_TRUE(twin_pairs(complete(5, 4)).empty());
  EXPECT_EQ(twin_pairs(complete(4, 4)).size(), 6u);
}

TEST(Twins, IsEquivalenceRelation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 7;
    const Hypergraph h = make(n, 3, oracle::random_edges(rng, n, 3, 0.1));
    const auto pairs = twin_pairs(h);
    std::set<std::pair<int, int>> set(pairs.begin(), pairs.end());
    // Reference: identical incidence vectors.
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        bool same = true;
        for (const auto& e : h.edges()) same = same && e.contains(a) == e.contains(b);
        EXPECT_EQ(set.count({a, b}) == 1, same);
      }
    }
    // Transitivity.
    for (const auto& [a, b] : pairs)
      for (const auto& [c, d] : pairs)
        if (b == c) {
          EXPECT_TRUE(set.count({a, d}));
        }
  }
}

TEST(Components, Examples) {
  const auto k4k5 = disjoint_union(complete(4, 4), complete(5, 4));
  const auto c = components(k4k5);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].size(), 4u);
  EXPECT_EQ(c[1].size(), 5u);
  EXPECT_EQ(components(fano_complement()).size(), 1u);
  const auto singles = components(Hypergraph(3, 2));
  EXPECT_EQ(singles, (std::vector<std::vector<int>>{{1}, {2}, {3}}));
}

TEST(Weights, Examples) {
  // 1 has degree 1, 2..4 degree 2.
  const Hypergraph h(10, 4, {ks({1, 2, 3, 4}), ks({2, 5, 6, 7}), ks({3, 4, 8, 9})});
  const auto report = weight_report(h);
  ASSERT_EQ(report[0].edge, ks({1, 2, 3, 4}));
  EXPECT_EQ(report[0].phi, Rational(5, 2));
  EXPECT_TRUE(report[0].heavy);
  EXPECT_EQ(report[0].degrees, (std::vector<int>{1, 2, 2, 2}));

  // Every vertex of degree 2: phi = 2, not heavy.
  const Hypergraph cyc(8, 4, {ks({1, 2, 3, 4}), ks({3, 4, 5, 6}), ks({5, 6, 7, 8}), ks({1, 2, 7, 8})});
  for (const auto& w : weight_report(cyc)) {
    EXPECT_EQ(w.phi, Rational(2));
    EXPECT_FALSE(w.heavy);
  }

  // An isolated K4 inside a larger hypergraph is special.
  const auto big = disjoint_union(fano_complement(), complete(4, 4));
  const auto wr = weight_report(big);
  EXPECT_TRUE(wr.back().special);
  EXPECT_EQ(wr.back().phi, Rational(4));
}

TEST(Weights, ThresholdIsStrict) {
  // First edge has degrees (1,2,3,3): phi = 1 + 1/2 + 2/3 = 13/6 exactly.
  const Hypergraph h(19, 4, {ks({1, 2, 3, 4}), ks({2, 5, 6, 7}), ks({3, 8, 9, 10}), ks({3, 11, 12, 13}),
                             ks({4, 14, 15, 16}), ks({4, 17, 18, 19})});
  const auto w = weight_report(h).front();
  EXPECT_EQ(w.phi, Rational(13, 6));
  EXPECT_FALSE(w.heavy);
}

TEST(Weights, PhiSumIdentityOnConstructions) {
  std::vector<Hypergraph> corpus;
  for (int n = 4; n <= 20; ++n) corpus.push_back(sat4_construction(n));
  for (int n = 3; n <= 12; ++n) corpus.push_back(sat3_construction(n));
  corpus.push_back(wsat4_construction(56));
  corpus.push_back(dual_hypergraph(load_graph(BOWTIE_FIXTURE_DIR "/robertson.el"), 4));
  for (const auto& h : corpus) {
    const auto d = diagnose_weights(h);
    EXPECT_EQ(d.phi_total, Rational(d.non_isolated));
    int reference = 0;
    for (int v = 1; v <= h.order(); ++v) reference += h.degree(v) > 0 ? 1 : 0;
    EXPECT_EQ(d.non_isolated, reference);
  }
}

TEST(HypergraphIo, RoundTrip) {
  const auto h = sat4_construction(13);
  const auto back = parse_hypergraph(to_text(h, "thirteen"));
  EXPECT_TRUE(back.same_edges(h));
  EXPECT_EQ(back.order(), 13);
}

TEST(HypergraphIo, CommentsAndBlankLines) {
  const auto h = parse_hypergraph("# header\n\n7 3\n1 2 3\n# mid\n  4 5 6  \n");
  EXPECT_EQ(h.order(), 7);
  EXPECT_EQ(h.size(), 2u);
}

TEST(HypergraphIo, ErrorsCarryPositions) {
  try {
    parse_hypergraph("5 3\n1 2 3\n1 x 4\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_hypergraph("5 3\n1 2 3\n1 2 3\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_hypergraph("5 3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("5 3\n3 2 1\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("5 3\n1 2 6\n"), ParseError);
  EXPECT_THROW(parse_hypergraph(""), ParseError);
  EXPECT_THROW(parse_hypergraph("3 4\n"), ParseError);
}
