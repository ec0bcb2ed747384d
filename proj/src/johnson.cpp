#include "bowtie/johnson.hpp"

#include <algorithm>
#include <string>

#include "bowtie/error.hpp"

namespace bowtie {

JohnsonGraph JohnsonGraph::build(int n, int k, std::uint64_t max_vertices) {
  if (k < 1 || k > n || n > kMaxVertices) {
    throw InputError("J(n,k,1) needs 1 <= k <= n <= " + std::to_string(kMaxVertices));
  }
  const std::uint64_t count = binomial(n, k);
  if (count > max_vertices) {
    throw BudgetExceeded("J(" + std::to_string(n) + "," + std::to_string(k) + ",1) has " + std::to_string(count) +
                         " vertices, above the budget of " + std::to_string(max_vertices));
  }
  // Distinct singletons never meet in exactly one vertex.
  const std::uint64_t degree = k == 1 ? 0 : static_cast<std::uint64_t>(k) * binomial(n - k, k - 1);
  JohnsonGraph j(n, k, count, degree);
  if (count <= kMaterialiseLimit) {
    std::vector<VertexMask> masks(count);
    for (std::uint64_t i = 0; i < count; ++i) masks[i] = colex_unrank(i, k).mask();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(count * j.degree_ / 2);
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a + 1; b < count; ++b) {
        if (popcount(masks[a] & masks[b]) == 1) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
    j.graph_.emplace(static_cast<int>(count), edges);
  }
  return j;
}

std::uint64_t JohnsonGraph::index_of(const KSet& s) const {
  if (s.size() != k_ || s.max_element() > n_) throw InputError("k-set " + s.to_string() + " is not a vertex of J(n,k,1)");
  return colex_rank(s);
}

const SimpleGraph& JohnsonGraph::graph() const {
  if (!graph_) throw BudgetExceeded("Johnson graph too large to materialise");
  return *graph_;
}

namespace {

void require_same_shape(const Hypergraph& h, const JohnsonGraph& j) {
  if (h.order() != j.n() || h.uniformity() != j.k()) {
    throw InputError("hypergraph (n=" + std::to_string(h.order()) + ", k=" + std::to_string(h.uniformity()) +
                     ") does not match J(" + std::to_string(j.n()) + "," + std::to_string(j.k()) + ",1)");
  }
}

}  // namespace

std::vector<int> hypergraph_as_vertex_set(const Hypergraph& h, const JohnsonGraph& j) {
  require_same_shape(h, j);
  std::vector<int> out;
  out.reserve(h.size());
  for (const KSet& e : h.edges()) out.push_back(static_cast<int>(j.index_of(e)));
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph vertex_set_as_hypergraph(const std::vector<int>& indices, const JohnsonGraph& j) {
  auto sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<KSet> edges;
  edges.reserve(sorted.size());
  for (int i : sorted) {
    if (i < 0 || static_cast<std::uint64_t>(i) >= j.vertex_count()) throw InputError("vertex index out of range");
    edges.push_back(j.vertex(static_cast<std::uint64_t>(i)));
  }
  return Hypergraph(j.n(), j.k(), std::move(edges));
}

SetCheck check_set(const JohnsonGraph& j, const std::vector<int>& indices) {
  std::vector<VertexMask> members;
  members.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<std::uint64_t>(i) >= j.vertex_count()) throw InputError("vertex index out of range");
    members.push_back(j.vertex(static_cast<std::uint64_t>(i)).mask());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto meets_once = [](VertexMask a, VertexMask b) { return popcount(a & b) == 1; };

  SetCheck r;
  r.independent = true;
  for (std::size_t a = 0; a < members.size() && r.independent; ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (meets_once(members[a], members[b])) {
        r.independent = false;
        break;
      }
    }
  }
  r.dominating = for_each_kset(j.n(), j.k(), [&](const KSet& s) {
    if (std::binary_search(members.begin(), members.end(), s.mask())) return true;
    return std::any_of(members.begin(), members.end(), [&](VertexMask m) { return meets_once(m, s.mask()); });
  });
  r.maximal_independent = r.independent && r.dominating;
  return r;
}

void write_johnson_edge_list(std::ostream& out, const JohnsonGraph& j) {
  out << "# J(" << j.n() << "," << j.k() << ",1); vertices are colex ranks of " << j.k() << "-subsets of [1.."
      << j.n() << "]\n";
  out << j.vertex_count() << '\n';
  for (std::uint64_t a = 0; a < j.vertex_count(); ++a) {
    const VertexMask ma = j.vertex(a).mask();
    for (std::uint64_t b = a + 1; b < j.vertex_count(); ++b) {
      if (popcount(ma & j.vertex(b).mask()) == 1) out << a << ' ' << b << '\n';
    }
  }
}

}  // namespace bowtie
