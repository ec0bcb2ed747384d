#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bowtie {

/// Undirected simple graph on vertices 0..n-1. Keeps sorted neighbour lists
/// and bit-vector adjacency rows. Immutable after construction.
class SimpleGraph {
 public:
  using Row = boost::dynamic_bitset<>;

  SimpleGraph() = default;
  /// Throws InputError on loops, repeated edges or out-of-range endpoints.
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(neighbours_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbours(int v) const { return neighbours_[static_cast<std::size_t>(v)]; }
  const Row& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  /// Edges as (u, v), u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  /// Common degree, or nullopt if the graph is not regular.
  std::optional<int> regular_degree() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.neighbours_ == b.neighbours_; }

 private:
  std::vector<std::vector<int>> neighbours_;
  std::vector<Row> rows_;
  std::size_t edge_count_ = 0;
};

enum class GraphFormat { graph6, edge_list };

/// graph6 for n <= 62 and the 63-prefixed form up to 258047 vertices. Errors
/// report the byte position.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

/// Edge-list text: first non-comment line holds the vertex count, then one
/// "u v" pair per line, 0-based; '#' starts a comment line. An edge may be
/// listed once or in both directions, but the file must be consistent.
SimpleGraph parse_edge_list(std::istream& in);
SimpleGraph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const SimpleGraph& g, std::string_view comment = {});

SimpleGraph parse_graph(std::string_view text, GraphFormat format);
/// Picks the format from the extension: .g6 / .graph6 for graph6, anything else is an edge list.
SimpleGraph load_graph(const std::string& path);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

/// Some cycle of length girth(g), as a vertex sequence; empty for forests.
std::vector<int> shortest_cycle(const SimpleGraph& g);

/// u ~ v iff 1 <= dist(u, v) <= 2.
SimpleGraph square(const SimpleGraph& g);

/// Vertex sets whose closed neighbourhoods partition V(g), each sorted, in
/// search order. At most `cap` results.
std::vector<std::vector<int>> efficient_dominating_sets(const SimpleGraph& g, std::size_t cap = 1);

/// Exact maximum independent set size; throws InputError above 64 vertices.
int independence_number(const SimpleGraph& g);

/// Convenience builders used by tests and the CLI.
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph hypercube(int d);

}  // namespace bowtie
