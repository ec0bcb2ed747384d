#include "bowtie/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "bowtie/error.hpp"

namespace bowtie {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  const auto un = static_cast<std::size_t>(n);
  neighbours_.assign(un, {});
  rows_.assign(un, Row(un));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                       std::to_string(n) + " vertices");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v))) {
      throw InputError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    neighbours_[static_cast<std::size_t>(u)].push_back(v);
    neighbours_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
  }
  for (auto& list : neighbours_) std::sort(list.begin(), list.end());
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> SimpleGraph::regular_degree() const {
  if (order() == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < order(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

// ---------------------------------------------------------------------------
// graph6

SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (text.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  const std::string_view body = text.substr(offset);

  auto value_at = [&](std::size_t i) -> int {
    if (i >= body.size()) throw ParseError("graph6 input truncated", 1, offset + i + 1);
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", 1, offset + i + 1);
    return c - 63;
  };

  std::size_t pos = 0;
  int n = 0;
  if (body.empty()) throw ParseError("empty graph6 string", 1, offset + 1);
  if (static_cast<unsigned char>(body[0]) == 126) {
    if (body.size() > 1 && static_cast<unsigned char>(body[1]) == 126) {
      throw ParseError("graph6 sizes above 258047 are not supported", 1, offset + 2);
    }
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    if (n < 63) throw ParseError("non-canonical graph6 size prefix", 1, offset + 1);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  const std::size_t bytes = (pairs + 5) / 6;
  if (body.size() != pos + bytes) {
    throw ParseError("graph6 body has " + std::to_string(body.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     1, offset + std::min(body.size(), pos + bytes) + 1);
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = value_at(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, edges);
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 258047) throw InputError("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// edge list

namespace {

std::vector<long long> line_ints(const std::string& line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) {
      throw ParseError("expected an integer, got '" + line.substr(i, j - i) + "'", line_no, i + 1);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::set<std::pair<int, int>> directed;
  std::vector<std::size_t> first_line_of;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> listed;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto values = line_ints(line, line_no);
    if (n < 0) {
      if (values.size() != 1 || values[0] < 0 || values[0] > std::numeric_limits<int>::max()) {
        throw ParseError("header must be a single vertex count", line_no);
      }
      n = values[0];
      continue;
    }
    if (values.size() != 2) throw ParseError("edge line must hold two vertices", line_no);
    for (long long v : values) {
      if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line_no);
    }
    const int u = static_cast<int>(values[0]);
    const int v = static_cast<int>(values[1]);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
    if (!directed.insert({u, v}).second) throw ParseError("repeated edge", line_no);
    listed.push_back({{u, v}, line_no});
  }
  if (n < 0) throw ParseError("missing vertex-count header", line_no + 1);

  // Either every edge appears once, or every edge appears in both directions.
  std::size_t mirrored = 0;
  for (const auto& [uv, ln] : listed) mirrored += directed.contains({uv.second, uv.first}) ? 1 : 0;
  std::vector<std::pair<int, int>> edges;
  if (mirrored == 0) {
    for (const auto& [uv, ln] : listed) edges.push_back(uv);
  } else {
    for (const auto& [uv, ln] : listed) {
      if (!directed.contains({uv.second, uv.first})) {
        throw ParseError("asymmetric edge list: (" + std::to_string(uv.first) + "," + std::to_string(uv.second) +
                             ") has no reverse",
                         ln);
      }
      if (uv.first < uv.second) edges.push_back(uv);
    }
  }
  return SimpleGraph(static_cast<int>(n), edges);
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g, std::string_view comment) {
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const bool g6 = path.ends_with(".g6") || path.ends_with(".graph6");
  return parse_graph(buffer.str(), g6 ? GraphFormat::graph6 : GraphFormat::edge_list);
}

// ---------------------------------------------------------------------------
// structure

namespace {

struct CycleHit {
  int length = std::numeric_limits<int>::max();
  int root = -1;
  int u = -1;
  int w = -1;
};

/// BFS from root; smallest dist[u] + dist[w] + 1 over non-tree edges.
CycleHit bfs_cycle(const SimpleGraph& g, int root, std::vector<int>& dist, std::vector<int>& parent) {
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(parent.begin(), parent.end(), -1);
  CycleHit best;
  std::queue<int> q;
  dist[static_cast<std::size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbours(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        q.push(w);
      } else if (parent[static_cast<std::size_t>(u)] != w) {
        const int len = dist[static_cast<std::size_t>(u)] + dw + 1;
        if (len < best.length) best = CycleHit{len, root, u, w};
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth(const SimpleGraph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<int> parent(dist.size());
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < g.order(); ++s) best = std::min(best, bfs_cycle(g, s, dist, parent).length);
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int> shortest_cycle(const SimpleGraph& g) {
  const auto target = girth(g);
  if (!target) return {};
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<int> parent(dist.size());
  for (int s = 0; s < g.order(); ++s) {
    const CycleHit hit = bfs_cycle(g, s, dist, parent);
    if (hit.length != *target) continue;
    std::vector<int> left;
    std::vector<int> right;
    for (int v = hit.u; v != -1; v = parent[static_cast<std::size_t>(v)]) left.push_back(v);
    for (int v = hit.w; v != -1; v = parent[static_cast<std::size_t>(v)]) right.push_back(v);
    // Both end at the root; the walk is a simple cycle iff they meet only there.
    std::set<int> seen(left.begin(), left.end());
    bool simple = true;
    for (std::size_t i = 0; i + 1 < right.size(); ++i) simple = simple && !seen.contains(right[i]);
    if (!simple) continue;
    std::vector<int> cycle(left.rbegin(), left.rend());
    for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    return cycle;
  }
  return {};
}

SimpleGraph square(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    SimpleGraph::Row reach = g.row(u);
    for (int w : g.neighbours(u)) reach |= g.row(w);
    reach.reset(static_cast<std::size_t>(u));
    for (auto v = reach.find_next(static_cast<std::size_t>(u)); v != SimpleGraph::Row::npos; v = reach.find_next(v)) {
      edges.emplace_back(u, static_cast<int>(v));
    }
  }
  return SimpleGraph(g.order(), edges);
}

namespace {

void exact_cover(const SimpleGraph& g, const std::vector<SimpleGraph::Row>& closed, SimpleGraph::Row& covered,
                 std::vector<int>& chosen, std::vector<std::vector<int>>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (covered.all()) {
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  // Uncovered vertex with the fewest usable centres.
  int pick = -1;
  std::vector<int> best_candidates;
  for (int x = 0; x < g.order(); ++x) {
    if (covered.test(static_cast<std::size_t>(x))) continue;
    std::vector<int> candidates;
    auto consider = [&](int c) {
      if (!closed[static_cast<std::size_t>(c)].intersects(covered)) candidates.push_back(c);
    };
    consider(x);
    for (int c : g.neighbours(x)) consider(c);
    std::sort(candidates.begin(), candidates.end());
    if (pick < 0 || candidates.size() < best_candidates.size()) {
      pick = x;
      best_candidates = std::move(candidates);
      if (best_candidates.empty()) return;
    }
  }
  for (int c : best_candidates) {
    covered |= closed[static_cast<std::size_t>(c)];
    chosen.push_back(c);
    exact_cover(g, closed, covered, chosen, out, cap);
    chosen.pop_back();
    covered -= closed[static_cast<std::size_t>(c)];
    if (out.size() >= cap) return;
  }
}

}  // namespace

std::vector<std::vector<int>> efficient_dominating_sets(const SimpleGraph& g, std::size_t cap) {
  std::vector<SimpleGraph::Row> closed;
  closed.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    closed.push_back(g.row(v));
    closed.back().set(static_cast<std::size_t>(v));
  }
  SimpleGraph::Row covered(static_cast<std::size_t>(g.order()));
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;
  if (cap > 0) exact_cover(g, closed, covered, chosen, out, cap);
  return out;
}

namespace {

int max_independent(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int size, int best) {
  if (candidates == 0) return std::max(best, size);
  if (size + __builtin_popcountll(candidates) <= best) return best;
  // Some vertex of N[v] lies in every maximum independent set of the
  // remaining graph; branch over the smallest such closed neighbourhood.
  int pivot = -1;
  int pivot_degree = 65;
  for (std::uint64_t m = candidates; m != 0; m &= m - 1) {
    const int v = __builtin_ctzll(m);
    const int d = __builtin_popcountll(adj[static_cast<std::size_t>(v)] & candidates);
    if (d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  std::uint64_t branch = (adj[static_cast<std::size_t>(pivot)] & candidates) | (std::uint64_t{1} << pivot);
  for (; branch != 0; branch &= branch - 1) {
    const int v = __builtin_ctzll(branch);
    const std::uint64_t rest = candidates & ~adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    best = max_independent(adj, rest, size + 1, best);
    candidates &= ~(std::uint64_t{1} << v);  // later branches exclude v
    if (size + 1 + __builtin_popcountll(candidates) <= best) break;
  }
  return best;
}

}  // namespace

int independence_number(const SimpleGraph& g) {
  if (g.order() > 64) throw InputError("independence_number supports at most 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbours(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  return max_independent(adj, all, 0, 0);
}

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return SimpleGraph(n, e);
}

SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return SimpleGraph(n, e);
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return SimpleGraph(a + b, e);
}

SimpleGraph hypercube(int d) {
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return SimpleGraph(n, e);
}

}  // namespace bowtie
