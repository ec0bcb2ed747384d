#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bowtie/error.hpp"
#include "bowtie/graph.hpp"

using namespace bowtie;

namespace {

SimpleGraph fixture(const std::string& name) { return load_graph(std::string(BOWTIE_FIXTURE_DIR) + "/" + name); }

SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

// Girth by checking, for every edge uv, the shortest u-v path avoiding uv.
std::optional<int> girth_reference(const SimpleGraph& g) {
  std::optional<int> best;
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (int y : g.neighbours(x)) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[static_cast<std::size_t>(v)] > 0) {
      const int len = dist[static_cast<std::size_t>(v)] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

}  // namespace

TEST(SimpleGraph, Validation) {
  EXPECT_THROW(SimpleGraph(3, {{0, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InputError);
  const SimpleGraph g(3, {{2, 0}});
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 2}}));
}

TEST(Graph6, Examples) {
  const auto empty = parse_graph6("D??");
  EXPECT_EQ(empty.order(), 5);
  EXPECT_EQ(empty.edge_count(), 0u);
  const auto k5 = parse_graph6("D~{");
  EXPECT_EQ(k5, complete_graph(5));
  EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(parse_graph6(">>graph6<<D~{\n"), complete_graph(5));
  // Petersen graph in its usual graph6 form.
  const auto petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.edge_count(), 15u);
  EXPECT_EQ(petersen.regular_degree(), 3);
  EXPECT_EQ(girth(petersen), 5);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);
  EXPECT_THROW(parse_graph6("D??\x01"), ParseError);
  try {
    parse_graph6("D?\x01");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Graph6, RoundTripLarge) {
  std::mt19937 rng(3);
  for (int n : {0, 1, 2, 7, 62, 63, 64, 100}) {
    const auto g = random_graph(rng, n, 0.3);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g) << n;
  }
}

TEST(EdgeList, K33) {
  const auto g = fixture("k33.el");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_EQ(g, complete_bipartite(3, 3));
}

TEST(EdgeList, MirroredOrSingle) {
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n"), path_graph(3));
  EXPECT_EQ(parse_edge_list("# c\n3\n0 1\n1 0\n1 2\n2 1\n"), path_graph(3));
  EXPECT_THROW(parse_edge_list("3\n0 1\n1 0\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x\n"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937 rng(9);
  for (int n : {1, 5, 20, 40}) {
    const auto g = random_graph(rng, n, 0.2);
    std::ostringstream out;
    write_edge_list(out, g, "random");
    EXPECT_EQ(parse_edge_list(out.str()), g);
    EXPECT_EQ(parse_graph(out.str(), GraphFormat::edge_list), g);
  }
}

TEST(Fixtures, QuarticGirthFive) {
  const auto g = fixture("hog50403.el");
  EXPECT_EQ(g.order(), 20);
  EXPECT_EQ(g.edge_count(), 40u);
  EXPECT_EQ(g.regular_degree(), 4);
  EXPECT_EQ(girth(g), 5);
  for (int r : {5, 6}) {
    const auto h = fixture("quartic_girth5_order" + std::to_string(5 * r) + ".el");
    EXPECT_EQ(h.order(), 5 * r);
    EXPECT_EQ(h.regular_degree(), 4);
    EXPECT_GE(girth(h).value_or(99), 5);
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(complete_bipartite(3, 3)), 4);
  const auto robertson = fixture("robertson.el");
  EXPECT_EQ(robertson.order(), 19);
  EXPECT_EQ(robertson.regular_degree(), 4);
  EXPECT_EQ(girth(robertson), 5);
  EXPECT_EQ(girth(path_graph(6)), std::nullopt);
  EXPECT_EQ(girth(cycle_graph(9)), 9);
  EXPECT_EQ(girth(hypercube(3)), 4);
}

TEST(Girth, AgreesWithReference) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_graph(rng, 12, 0.08 + 0.02 * (t % 5));
    EXPECT_EQ(girth(g), girth_reference(g));
    const auto c = shortest_cycle(g);
    if (girth(g)) {
      ASSERT_EQ(static_cast<int>(c.size()), *girth(g));
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(g.adjacent(c[i], c[(i + 1) % c.size()]));
    } else {
      EXPECT_TRUE(c.empty());
    }
  }
}

TEST(Square, Examples) {
  EXPECT_EQ(square(path_graph(3)), complete_graph(3));
  EXPECT_EQ(square(cycle_graph(6)).regular_degree(), 4);
  // 4 neighbours and 4*3 distinct second neighbours below girth 5.
  EXPECT_EQ(square(fixture("hog50403.el")).regular_degree(), 16);
}

TEST(Square, HasTrianglesWhenPathOfLengthTwo) {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_graph(rng, 10, 0.2);
    bool has_p3 = false;
    for (int v = 0; v < g.order(); ++v) has_p3 = has_p3 || g.degree(v) >= 2;
    if (has_p3) {
      EXPECT_LE(girth(square(g)).value_or(99), 3);
    }
  }
}

TEST(EfficientDomination, Examples) {
  const auto q3 = efficient_dominating_sets(hypercube(3), 100);
  EXPECT_NE(std::find(q3.begin(), q3.end(), std::vector<int>{0, 7}), q3.end());
  EXPECT_EQ(q3.size(), 4u);
  const auto k3 = efficient_dominating_sets(complete_graph(3), 10);
  EXPECT_EQ(k3, (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_TRUE(efficient_dominating_sets(cycle_graph(4), 10).empty());
}

TEST(EfficientDomination, PartitionsVertices) {
  for (const std::string name : {"hog50403.el", "quartic_girth5_order25.el", "quartic_girth5_order30.el"}) {
    const auto g = fixture(name);
    const auto sets = efficient_dominating_sets(g, 5);
    ASSERT_FALSE(sets.empty()) << name;
    for (const auto& s : sets) {
      EXPECT_EQ(static_cast<int>(s.size()) * (*g.regular_degree() + 1), g.order());
      std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
      for (int c : s) {
        ++hits[static_cast<std::size_t>(c)];
        for (int u : g.neighbours(c)) ++hits[static_cast<std::size_t>(u)];
      }
      for (int h : hits) EXPECT_EQ(h, 1);
    }
  }
}

TEST(IndependenceNumber, Examples) {
  EXPECT_EQ(independence_number(complete_graph(5)), 1);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(square(fixture("hog50403.el"))), 4);
  EXPECT_EQ(independence_number(parse_graph6("IheA@GUAo")), 4);
}

TEST(IndependenceNumber, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, 11, 0.3);
    int best = 0;
    for (unsigned m = 0; m < (1u << 11); ++m) {
      bool ok = true;
      for (const auto& [u, v] : g.edges()) ok = ok && !((m >> u & 1u) && (m >> v & 1u));
      if (ok) best = std::max(best, __builtin_popcount(m));
    }
    EXPECT_EQ(independence_number(g), best);
  }
}
