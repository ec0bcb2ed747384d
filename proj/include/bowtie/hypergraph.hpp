#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "bowtie/kset.hpp"

namespace bowtie {

using Rational = boost::rational<std::int64_t>;

/// A k-uniform hypergraph on vertex labels [1..n] with a duplicate-free edge
/// list. Edge order is preserved as given. Immutable after construction.
class Hypergraph {
 public:
  /// Throws InputError on k < 1, k > n (unless n == 0), n > kMaxVertices,
  /// an edge of the wrong size or out of range, or a repeated edge.
  Hypergraph(int n, int k, std::vector<KSet> edges = {});

  int order() const { return n_; }
  int uniformity() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<KSet>& edges() const { return edges_; }
  bool contains(const KSet& e) const { return index_.contains(e); }

  /// Degrees indexed by label; entry 0 is unused.
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }

  /// Same vertex set and same edge set, regardless of edge order.
  bool same_edges(const Hypergraph& other) const;

 private:
  int n_;
  int k_;
  std::vector<KSet> edges_;
  std::unordered_set<KSet, KSetHash> index_;
  std::vector<int> degrees_;
};

/// Some pair of edges meeting in exactly one vertex, if any (first in edge order).
std::optional<std::pair<KSet, KSet>> find_bowtie(const Hypergraph& h);
inline bool is_bowtie_free(const Hypergraph& h) { return !find_bowtie(h).has_value(); }
/// Number of unordered edge pairs meeting in exactly one vertex.
std::size_t count_bowties(const Hypergraph& h);

/// Unordered pairs {u, v}, u < v, with identical incident-edge sets.
/// Two isolated vertices count as twins.
std::vector<std::pair<int, int>> twin_pairs(const Hypergraph& h);

/// Connected components under "share an edge", each sorted, ordered by
/// smallest label. Isolated vertices are singletons.
std::vector<std::vector<int>> components(const Hypergraph& h);

struct EdgeWeight {
  KSet edge;
  Rational phi;              // sum over v in edge of 1/deg(v)
  bool heavy = false;        // phi > 13/6
  bool special = false;      // contains a twin pair of common degree 1 or 2
  std::vector<int> degrees;  // vertex degrees, sorted ascending
};

std::vector<EdgeWeight> weight_report(const Hypergraph& h);

/// Threshold separating heavy edges.
inline const Rational kHeavyThreshold{13, 6};

/// Structural facts about the phi weights that hold for every B4
/// semi-saturated hypergraph; each list collects the violating edges.
struct WeightDiagnostics {
  Rational phi_total;
  int non_isolated = 0;
  std::size_t special_edges = 0;
  std::size_t heavy_normal_edges = 0;
  std::vector<KSet> bad_heavy_pattern;  // heavy normal edge not of degree type (1,2,2,x), x in [2..5]
  std::vector<KSet> bad_neighbours;     // partner edges f, h not both normal or min(phi) > 2
};

WeightDiagnostics diagnose_weights(const Hypergraph& h);

/// Text interchange format: first line "n k", then one edge per line as
/// increasing labels; lines starting with '#' are comments.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
void write_hypergraph(std::ostream& out, const Hypergraph& h, std::string_view comment = {});
std::string to_text(const Hypergraph& h, std::string_view comment = {});

}  // namespace bowtie
