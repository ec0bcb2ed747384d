#include "bowtie/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bowtie/error.hpp"

namespace bowtie {

Hypergraph::Hypergraph(int n, int k, std::vector<KSet> edges)
    : n_(n), k_(k), edges_(std::move(edges)), degrees_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside [0.." + std::to_string(kMaxVertices) + "]");
  }
  if (k < 1) throw InputError("uniformity must be positive");
  // n == 0 is the identity of disjoint union and is allowed for any k.
  if (k > n && n != 0) {
    throw InputError("uniformity " + std::to_string(k) + " exceeds vertex count " + std::to_string(n));
  }
  const VertexMask universe = n == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  index_.reserve(edges_.size());
  for (const KSet& e : edges_) {
    if (e.size() != k) throw InputError("edge " + e.to_string() + " does not have " + std::to_string(k) + " vertices");
    if ((e.mask() & ~universe) != 0) throw InputError("edge " + e.to_string() + " leaves [1.." + std::to_string(n) + "]");
    if (!index_.insert(e).second) throw InputError("repeated edge " + e.to_string());
    for (int v : e.elements()) ++degrees_[static_cast<std::size_t>(v)];
  }
}

bool Hypergraph::same_edges(const Hypergraph& other) const {
  if (n_ != other.n_ || k_ != other.k_ || edges_.size() != other.edges_.size()) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const KSet& e) { return other.contains(e); });
}

std::optional<std::pair<KSet, KSet>> find_bowtie(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (intersection_size(es[i], es[j]) == 1) return std::pair{es[i], es[j]};
    }
  }
  return std::nullopt;
}

std::size_t count_bowties(const Hypergraph& h) {
  const auto& es = h.edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) count += intersection_size(es[i], es[j]) == 1 ? 1 : 0;
  }
  return count;
}

namespace {

/// Incident edge indices per vertex label.
std::vector<std::vector<std::size_t>> incidence(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(h.order()) + 1);
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    for (int v : h.edges()[i].elements()) inc[static_cast<std::size_t>(v)].push_back(i);
  }
  return inc;
}

}  // namespace

std::vector<std::pair<int, int>> twin_pairs(const Hypergraph& h) {
  const auto inc = incidence(h);
  std::map<std::vector<std::size_t>, std::vector<int>> classes;
  for (int v = 1; v <= h.order(); ++v) classes[inc[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::pair<int, int>> out;
  for (const auto& [signature, members] : classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> components(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.order()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const KSet& e : h.edges()) {
    const auto vs = e.elements();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      const int a = find(vs[0]);
      const int b = find(vs[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int v = 1; v <= h.order(); ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<EdgeWeight> weight_report(const Hypergraph& h) {
  const auto twins = twin_pairs(h);
  std::vector<EdgeWeight> out;
  out.reserve(h.size());
  for (const KSet& e : h.edges()) {
    EdgeWeight w{e, Rational{0}, false, false, {}};
    for (int v : e.elements()) {
      w.phi += Rational{1, h.degree(v)};
      w.degrees.push_back(h.degree(v));
    }
    std::sort(w.degrees.begin(), w.degrees.end());
    w.heavy = w.phi > kHeavyThreshold;
    w.special = std::any_of(twins.begin(), twins.end(), [&](const auto& p) {
      return e.contains(p.first) && e.contains(p.second) && h.degree(p.first) <= 2;
    });
    out.push_back(std::move(w));
  }
  return out;
}

WeightDiagnostics diagnose_weights(const Hypergraph& h) {
  WeightDiagnostics d;
  const auto report = weight_report(h);
  for (const auto& w : report) d.phi_total += w.phi;
  for (int v = 1; v <= h.order(); ++v) d.non_isolated += h.degree(v) > 0 ? 1 : 0;

  const auto& es = h.edges();
  // The other edge through a degree-2 vertex v of edge i.
  auto partner = [&](std::size_t i, int v) -> std::size_t {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (j != i && es[j].contains(v)) return j;
    }
    return es.size();
  };

  for (std::size_t i = 0; i < report.size(); ++i) {
    const auto& w = report[i];
    if (w.special) {
      ++d.special_edges;
      continue;
    }
    if (!w.heavy) continue;
    ++d.heavy_normal_edges;
    const auto& dg = w.degrees;
    const bool pattern = dg.size() == 4 && dg[0] == 1 && dg[1] == 2 && dg[2] == 2 && dg[3] >= 2 && dg[3] <= 5;
    if (!pattern) {
      d.bad_heavy_pattern.push_back(w.edge);
      continue;
    }
    std::vector<int> two;
    for (int v : w.edge.elements()) {
      if (h.degree(v) == 2) two.push_back(v);
    }
    for (std::size_t a = 0; a < two.size(); ++a) {
      for (std::size_t b = a + 1; b < two.size(); ++b) {
        const std::size_t f = partner(i, two[a]);
        const std::size_t g = partner(i, two[b]);
        const bool ok = f < es.size() && g < es.size() && f != g && !report[f].special && !report[g].special &&
                        std::min(report[f].phi, report[g].phi) <= Rational{2};
        if (!ok) {
          d.bad_neighbours.push_back(w.edge);
          a = two.size();
          break;
        }
      }
    }
  }
  return d;
}

}  // namespace bowtie
