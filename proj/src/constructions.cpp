#include "bowtie/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "bowtie/error.hpp"

#ifndef BOWTIE_FIXTURE_DIR
#define BOWTIE_FIXTURE_DIR "fixtures"
#endif

namespace bowtie {

namespace {

KSet make_set(std::vector<int> elements, int n) {
  std::sort(elements.begin(), elements.end());
  return KSet::from_elements(elements, n);
}

/// Edges of a hypergraph shifted up by `offset` labels.
std::vector<KSet> shifted(const Hypergraph& h, int offset, int n) {
  std::vector<KSet> out;
  out.reserve(h.size());
  for (const KSet& e : h.edges()) {
    auto vs = e.elements();
    for (int& v : vs) v += offset;
    out.push_back(KSet::from_elements(vs, n));
  }
  return out;
}

/// k-subsets A of `ground` (sorted) with |A ∩ core| in `sizes`, colex order.
std::vector<KSet> subsets_meeting(const std::vector<int>& ground, int k, const std::vector<int>& core,
                                  const std::vector<int>& sizes, int n) {
  const KSet core_set = make_set(core, n);
  std::vector<KSet> out;
  const int m = static_cast<int>(ground.size());
  for_each_kset(m, k, [&](const KSet& positions) {
    std::vector<int> vs;
    for (int p : positions.elements()) vs.push_back(ground[static_cast<std::size_t>(p - 1)]);
    const KSet a = make_set(vs, n);
    if (std::find(sizes.begin(), sizes.end(), intersection_size(a, core_set)) != sizes.end()) out.push_back(a);
    return true;
  });
  return out;
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

/// The 10-vertex saturated hypergraph of size 7, embedded on n >= 10 vertices.
std::vector<KSet> sat4_ten(int n) {
  auto edges = subsets_meeting(range(1, 5), 4, {1, 2, 3}, {2}, n);
  edges.push_back(KSet::from_elements({4, 5, 6, 7}, n));
  const auto tail = subsets_meeting(range(6, 10), 4, {8, 9, 10}, {2}, n);
  edges.insert(edges.end(), tail.begin(), tail.end());
  return edges;
}

}  // namespace

Hypergraph complete(int m, int k) {
  if (k < 1 || k > m) throw InputError("complete(m, k) needs 1 <= k <= m");
  std::vector<KSet> edges;
  edges.reserve(binomial(m, k));
  for_each_kset(m, k, [&](const KSet& s) {
    edges.push_back(s);
    return true;
  });
  return Hypergraph(m, k, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.order() == 0) return h2;
  if (h2.order() == 0) return h1;
  if (h1.uniformity() != h2.uniformity()) throw InputError("disjoint_union of different uniformities");
  const int n = h1.order() + h2.order();
  if (n > kMaxVertices) throw InputError("disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
  auto edges = shifted(h1, 0, n);
  const auto tail = shifted(h2, h1.order(), n);
  edges.insert(edges.end(), tail.begin(), tail.end());
  return Hypergraph(n, h1.uniformity(), std::move(edges));
}

const std::vector<std::vector<int>>& fano_lines() {
  static const std::vector<std::vector<int>> lines = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                                      {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  return lines;
}

Hypergraph fano_complement() {
  std::vector<KSet> edges;
  for (const auto& line : fano_lines()) {
    std::vector<int> rest;
    for (int v = 1; v <= 7; ++v) {
      if (std::find(line.begin(), line.end(), v) == line.end()) rest.push_back(v);
    }
    edges.push_back(KSet::from_elements(rest, 7));
  }
  return Hypergraph(7, 4, std::move(edges));
}

Hypergraph sat4_construction(int n, const std::optional<SatSplit>& split) {
  if (n < 4) throw InputError("sat4 construction needs n >= 4");
  if (split && n < 12) throw InputError("an explicit V/W split applies only for n >= 12");
  if (n <= 6) return complete(n, 4);
  if (n == 7) return fano_complement();
  if (n == 8) {
    auto edges = subsets_meeting(range(1, 6), 4, {1, 2, 3, 4}, {2, 4}, 8);
    edges.push_back(KSet::from_elements({5, 6, 7, 8}, 8));
    return Hypergraph(8, 4, std::move(edges));
  }
  if (n == 9) return disjoint_union(complete(4, 4), complete(5, 4));
  if (n == 10) return Hypergraph(10, 4, sat4_ten(10));
  if (n == 11) return disjoint_union(complete(4, 4), fano_complement());

  SatSplit parts = split.value_or(SatSplit{{}, range(11, n)});
  std::vector<int> all = parts.v;
  all.insert(all.end(), parts.w.begin(), parts.w.end());
  std::sort(all.begin(), all.end());
  if (all != range(11, n)) throw InputError("V and W must partition [11..n]");
  if (parts.v.size() == 1 || parts.w.size() == 1) throw InputError("|V| and |W| must differ from 1");

  auto edges = sat4_ten(n);
  std::sort(parts.v.begin(), parts.v.end());
  std::sort(parts.w.begin(), parts.w.end());
  for (int v : parts.v) edges.push_back(KSet::from_elements({1, 2, 3, v}, n));
  for (int w : parts.w) edges.push_back(KSet::from_elements({8, 9, 10, w}, n));
  return Hypergraph(n, 4, std::move(edges));
}

Hypergraph sat3_construction(int n) {
  if (n < 3) throw InputError("sat3 construction needs n >= 3");
  const int tail = n % 3 == 0 ? 0 : (n % 3 == 1 ? 4 : 5);
  std::vector<KSet> edges;
  for (int base = 0; base + 3 <= n - tail; base += 3) edges.push_back(KSet::from_elements({base + 1, base + 2, base + 3}, n));
  const int s = n - tail;  // the block occupies [s+1..n]
  if (tail == 4) {
    for_each_kset(4, 3, [&](const KSet& t) {
      auto vs = t.elements();
      for (int& v : vs) v += s;
      edges.push_back(KSet::from_elements(vs, n));
      return true;
    });
  } else if (tail == 5) {
    for (int c = s + 3; c <= n; ++c) edges.push_back(KSet::from_elements({s + 1, s + 2, c}, n));
  }
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph sat2_construction(int n) {
  if (n < 2) throw InputError("sat2 construction needs n >= 2");
  std::vector<KSet> edges;
  for (int i = 1; i + 1 <= n; i += 2) edges.push_back(KSet::from_elements({i, i + 1}, n));
  return Hypergraph(n, 2, std::move(edges));
}

namespace {

void require_regular(const SimpleGraph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) {
      throw InputError("graph is not " + std::to_string(k) + "-regular: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)));
    }
  }
}

void require_girth(const SimpleGraph& g, int at_least) {
  const auto gg = girth(g);
  if (gg && *gg < at_least) {
    std::string cycle;
    for (int v : shortest_cycle(g)) cycle += (cycle.empty() ? "" : "-") + std::to_string(v);
    throw InputError("girth " + std::to_string(*gg) + " is below " + std::to_string(at_least) + ": cycle " + cycle);
  }
}

/// Star hypergraph of a graph; extra[x] (0 = none) is appended to the star of x.
Hypergraph star_hypergraph(const SimpleGraph& g, int k, int n, const std::vector<int>& extra) {
  const auto es = g.edges();
  std::map<std::pair<int, int>, int> label;
  for (std::size_t i = 0; i < es.size(); ++i) label[es[i]] = static_cast<int>(i) + 1;
  std::vector<KSet> stars;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> vs;
    for (int y : g.neighbours(x)) vs.push_back(label.at({std::min(x, y), std::max(x, y)}));
    if (!extra.empty() && extra[static_cast<std::size_t>(x)] != 0) vs.push_back(extra[static_cast<std::size_t>(x)]);
    if (static_cast<int>(vs.size()) != k) throw InputError("star of vertex " + std::to_string(x) + " has the wrong size");
    stars.push_back(make_set(vs, n));
  }
  return Hypergraph(n, k, std::move(stars));
}

}  // namespace

Hypergraph dual_hypergraph(const SimpleGraph& g, int k) {
  if (k < 2) throw InputError("dual hypergraph needs k >= 2");
  require_regular(g, k);
  require_girth(g, k + 1);
  const int n = static_cast<int>(g.edge_count());
  if (n > kMaxVertices) throw InputError("dual hypergraph would exceed " + std::to_string(kMaxVertices) + " vertices");
  return star_hypergraph(g, k, n, {});
}

SharpConstruction sharpcon(const SimpleGraph& g, const std::optional<std::vector<int>>& centres, const PairSplit& split) {
  require_regular(g, 4);
  if (g.order() % 5 != 0 || g.order() == 0) throw InputError("order must be a positive multiple of 5");
  require_girth(g, 5);
  const int r = g.order() / 5;

  std::vector<int> us;
  if (centres) {
    us = *centres;
  } else {
    const auto found = efficient_dominating_sets(g, 1);
    if (found.empty()) throw InputError("graph has no efficient dominating set");
    us = found.front();
  }
  std::sort(us.begin(), us.end());
  if (static_cast<int>(us.size()) != r) {
    throw InputError("need " + std::to_string(r) + " centres, got " + std::to_string(us.size()));
  }
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int u : us) {
    if (u < 0 || u >= g.order()) throw InputError("centre out of range");
    auto claim = [&](int x) {
      if (owner[static_cast<std::size_t>(x)] >= 0) {
        throw InputError("closed neighbourhoods of centres overlap at vertex " + std::to_string(x));
      }
      owner[static_cast<std::size_t>(x)] = u;
    };
    claim(u);
    for (int x : g.neighbours(u)) claim(x);
  }

  // G' labels: non-centres in order, then v_i, w_i per centre.
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (!std::binary_search(us.begin(), us.end(), x)) relabel[static_cast<std::size_t>(x)] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    if (relabel[static_cast<std::size_t>(a)] >= 0 && relabel[static_cast<std::size_t>(b)] >= 0) {
      edges.emplace_back(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]);
    }
  }
  for (std::size_t i = 0; i < us.size(); ++i) {
    const int u = us[i];
    const auto& nb = g.neighbours(u);
    std::pair<int, int> first{nb[0], nb[1]};
    if (const auto it = split.find(u); it != split.end()) first = it->second;
    if (first.first == first.second || !g.adjacent(u, first.first) || !g.adjacent(u, first.second)) {
      throw InputError("pair split for centre " + std::to_string(u) + " must name two distinct neighbours");
    }
    const int v = next + 2 * static_cast<int>(i);
    const int w = v + 1;
    edges.emplace_back(v, w);
    for (int x : nb) {
      const bool to_v = x == first.first || x == first.second;
      edges.emplace_back(relabel[static_cast<std::size_t>(x)], to_v ? v : w);
    }
  }
  SimpleGraph modified(next + 2 * r, edges);

  const int n = 13 * r;
  if (n > kMaxVertices) throw InputError("construction exceeds " + std::to_string(kMaxVertices) + " vertices");
  std::vector<int> extra(static_cast<std::size_t>(modified.order()), 0);
  const int edge_labels = static_cast<int>(modified.edge_count());
  for (int i = 0; i < 2 * r; ++i) extra[static_cast<std::size_t>(next + i)] = edge_labels + 1 + i;
  Hypergraph h = star_hypergraph(modified, 4, n, extra);
  return SharpConstruction{std::move(h), std::move(modified), std::move(us)};
}

FixtureSource fixture_directory(const std::string& dir) {
  return [dir](int r) -> std::optional<SimpleGraph> {
    const auto path = std::filesystem::path(dir) / ("quartic_girth5_order" + std::to_string(5 * r) + ".el");
    if (!std::filesystem::exists(path)) return std::nullopt;
    return load_graph(path.string());
  };
}

FixtureSource default_fixtures() {
  const char* env = std::getenv("BOWTIE_FIXTURES");
  return fixture_directory(env != nullptr ? env : BOWTIE_FIXTURE_DIR);
}

std::optional<std::vector<int>> sharp_block_sizes(int n, const std::vector<int>& available) {
  if (n < 4 || (n - 4) % 13 != 0) return std::nullopt;
  const int t = (n - 4) / 13;
  auto has = [&](int r) { return std::find(available.begin(), available.end(), r) != available.end(); };
  // As many 4-blocks as possible, then 5-blocks, then 6-blocks.
  for (int a = has(4) ? t / 4 : 0; a >= 0; --a) {
    for (int b = has(5) ? (t - 4 * a) / 5 : 0; b >= 0; --b) {
      const int rest = t - 4 * a - 5 * b;
      if (rest % 6 != 0 || (rest > 0 && !has(6))) continue;
      std::vector<int> blocks(static_cast<std::size_t>(a), 4);
      blocks.insert(blocks.end(), static_cast<std::size_t>(b), 5);
      blocks.insert(blocks.end(), static_cast<std::size_t>(rest / 6), 6);
      return blocks;
    }
  }
  return std::nullopt;
}

Hypergraph wsat4_construction(int n, const FixtureSource& fixtures) {
  if (n < 4 || n % 13 != 4) throw InputError("wsat4 construction needs n = 4 (mod 13), got " + std::to_string(n));
  std::vector<int> available;
  std::map<int, SimpleGraph> graphs;
  for (int r : {4, 5, 6}) {
    if (auto g = fixtures(r)) {
      available.push_back(r);
      graphs.emplace(r, std::move(*g));
    }
  }
  const auto blocks = sharp_block_sizes(n, available);
  if (!blocks) {
    throw InputError("(n-4)/13 = " + std::to_string((n - 4) / 13) +
                     " is not a sum of available block sizes from {4,5,6}");
  }
  Hypergraph h(0, 4);
  std::map<int, Hypergraph> built;
  for (int r : *blocks) {
    if (!built.contains(r)) built.emplace(r, sharpcon(graphs.at(r)).hypergraph);
    h = disjoint_union(h, built.at(r));
  }
  return disjoint_union(h, complete(4, 4));
}

}  // namespace bowtie
