#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "bowtie/graph.hpp"
#include "bowtie/hypergraph.hpp"

namespace bowtie {

/// Rows are materialised up to this many vertices; larger graphs answer
/// adjacency queries through the intersection oracle.
inline constexpr std::uint64_t kMaterialiseLimit = 4096;

/// The generalised Johnson graph J(n, k, 1): vertices are the k-subsets of
/// [1..n] indexed by colex rank, adjacent iff they meet in exactly one element.
class JohnsonGraph {
 public:
  /// Throws InputError unless 1 <= k <= n <= kMaxVertices, and
  /// BudgetExceeded if C(n, k) exceeds max_vertices.
  static JohnsonGraph build(int n, int k, std::uint64_t max_vertices = 1'000'000);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t vertex_count() const { return count_; }
  /// k * C(n - k, k - 1).
  std::uint64_t degree() const { return degree_; }

  KSet vertex(std::uint64_t index) const { return colex_unrank(index, k_); }
  std::uint64_t index_of(const KSet& s) const;

  bool adjacent(std::uint64_t a, std::uint64_t b) const {
    return intersection_size(vertex(a), vertex(b)) == 1;
  }

  bool materialised() const { return graph_.has_value(); }
  /// The graph as a SimpleGraph; throws BudgetExceeded when not materialised.
  const SimpleGraph& graph() const;

 private:
  JohnsonGraph(int n, int k, std::uint64_t count, std::uint64_t degree) : n_(n), k_(k), count_(count), degree_(degree) {}

  int n_;
  int k_;
  std::uint64_t count_;
  std::uint64_t degree_;
  std::optional<SimpleGraph> graph_;
};

/// Sorted vertex indices of the edges of h. Throws InputError on (n, k) mismatch.
std::vector<int> hypergraph_as_vertex_set(const Hypergraph& h, const JohnsonGraph& j);
/// Edges in index order.
Hypergraph vertex_set_as_hypergraph(const std::vector<int>& indices, const JohnsonGraph& j);

struct SetCheck {
  bool independent = false;
  bool dominating = false;
  bool maximal_independent = false;
};

SetCheck check_set(const JohnsonGraph& j, const std::vector<int>& indices);

/// "u v" per line, 0-based colex indices, preceded by a comment naming the
/// graph and a vertex-count line (readable by parse_edge_list).
void write_johnson_edge_list(std::ostream& out, const JohnsonGraph& j);

}  // namespace bowtie
