#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bowtie/graph.hpp"
#include "bowtie/hypergraph.hpp"

namespace bowtie {

/// All C(m, k) k-subsets of [1..m], colex order.
Hypergraph complete(int m, int k);

/// h1 on [1..n1], h2 relabelled onto [n1+1..n1+n2]. Uniformities must agree
/// unless one side has no vertices.
Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);

/// Lines of the Fano plane used throughout; complements form FP^c.
const std::vector<std::vector<int>>& fano_lines();
/// 7 vertices, 7 edges: the complements in [7] of the Fano lines.
Hypergraph fano_complement();

/// Explicit split of [11..n] for the n >= 12 saturated family; both parts
/// must avoid size 1.
struct SatSplit {
  std::vector<int> v;
  std::vector<int> w;
};

/// Minimum B4-saturated hypergraph on n >= 4 vertices. For n >= 12 the
/// default split is V = {}, W = [11..n].
Hypergraph sat4_construction(int n, const std::optional<SatSplit>& split = std::nullopt);
/// Minimum B3-saturated hypergraph, n >= 3.
Hypergraph sat3_construction(int n);
/// floor(n/2) disjoint pairs, n >= 2.
Hypergraph sat2_construction(int n);

/// Vertices are the edges of g (1-based, in SimpleGraph::edges() order);
/// hyperedges are the vertex stars. Requires g k-regular of girth >= k+1.
Hypergraph dual_hypergraph(const SimpleGraph& g, int k);

/// Output of the sharp semi-saturation construction.
struct SharpConstruction {
  Hypergraph hypergraph;
  SimpleGraph modified;      // G': centres split into v_i, w_i
  std::vector<int> centres;  // efficient dominating set used, in g's labels
  /// Hypergraph labels: 1..|E(G')| are the edges of G' in modified.edges()
  /// order, then v_1, w_1, ..., v_r, w_r.
};

/// For each centre, the neighbour pair attached to v_i; the complementary
/// pair goes to w_i.
using PairSplit = std::map<int, std::pair<int, int>>;

/// Replaces every centre u_i of an efficient dominating set of a 4-regular
/// girth-5 graph of order 5r by adjacent vertices v_i, w_i, then takes the
/// star hypergraph (degree-3 stars also contain their own vertex).
/// Default centres: first efficient dominating set found; default split:
/// the two smallest neighbours go to v_i.
SharpConstruction sharpcon(const SimpleGraph& g, const std::optional<std::vector<int>>& centres = std::nullopt,
                           const PairSplit& split = {});

/// Loads the 4-regular girth-5 graph of order 5r from the fixture directory.
using FixtureSource = std::function<std::optional<SimpleGraph>(int r)>;
FixtureSource fixture_directory(const std::string& dir);
FixtureSource default_fixtures();

/// Block sizes r_i in {4,5,6} with sum (n - 4) / 13, or nullopt.
std::optional<std::vector<int>> sharp_block_sizes(int n, const std::vector<int>& available = {4, 5, 6});

/// Disjoint sharp blocks plus an isolated K4^(4): (6n - 11) / 13 edges on n
/// vertices, n = 4 (mod 13).
Hypergraph wsat4_construction(int n, const FixtureSource& fixtures = default_fixtures());

}  // namespace bowtie
