#include "bowtie/exact_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "bowtie/error.hpp"

namespace bowtie {

std::string to_string(SearchMode mode) {
  return mode == SearchMode::dominating ? "dominating" : "independent_dominating";
}

SearchMode parse_search_mode(const std::string& s) {
  if (s == "dominating") return SearchMode::dominating;
  if (s == "independent_dominating") return SearchMode::independent_dominating;
  throw InputError("unknown search mode '" + s + "'");
}

namespace {

/// Keeps `ws` as the `cap` lexicographically smallest sets offered so far.
void offer_witness(std::vector<std::vector<int>>& ws, std::vector<int> w, std::size_t cap) {
  if (cap == 0) return;
  if (ws.size() == cap && !(w < ws.back())) return;
  ws.insert(std::upper_bound(ws.begin(), ws.end(), w), std::move(w));
  if (ws.size() > cap) ws.pop_back();
}

/// Vertex-set membership flags after validating indices.
struct Constraints {
  std::vector<char> required;
  std::vector<char> allowed;
  std::vector<char> dominate;
  bool required_independent = true;
};

std::vector<char> to_flags(const std::vector<int>& vs, int n, const char* what) {
  std::vector<char> flags(static_cast<std::size_t>(n), 0);
  for (int v : vs) {
    if (v < 0 || v >= n) throw InputError(std::string(what) + " vertex " + std::to_string(v) + " out of range");
    flags[static_cast<std::size_t>(v)] = 1;
  }
  return flags;
}

Constraints resolve(const SearchProblem& p) {
  const int n = p.graph.order();
  Constraints c;
  c.required = to_flags(p.required, n, "required");
  c.allowed = p.allowed ? to_flags(*p.allowed, n, "allowed") : std::vector<char>(static_cast<std::size_t>(n), 1);
  c.dominate = p.dominate ? to_flags(*p.dominate, n, "dominate") : c.allowed;
  for (int v : p.required) {
    if (!c.allowed[static_cast<std::size_t>(v)]) {
      throw InputError("required vertex " + std::to_string(v) + " is not allowed");
    }
    for (int w : p.required) c.required_independent = c.required_independent && !p.graph.adjacent(v, w);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Fixed-width bit sets for the branch-and-bound inner loop.

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool any() const {
    for (auto x : w) {
      if (x) return true;
    }
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  int and_count(const Bits& o) const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += __builtin_popcountll(w[i] & o.w[i]);
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1) f(i * 64 + __builtin_ctzll(x));
    }
  }
};

struct BranchOutcome {
  int best = std::numeric_limits<int>::max();
  std::uint64_t count = 0;
  std::vector<std::vector<int>> witnesses;
};

template <int W>
class BranchAndBound {
 public:
  BranchAndBound(const SearchProblem& p, const Constraints& c) : p_(p), n_(p.graph.order()) {
    closed_.resize(static_cast<std::size_t>(n_));
    open_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      for (int w : p.graph.neighbours(v)) open_[static_cast<std::size_t>(v)].set(w);
      closed_[static_cast<std::size_t>(v)] = open_[static_cast<std::size_t>(v)];
      closed_[static_cast<std::size_t>(v)].set(v);
    }
    independent_ = p.mode == SearchMode::independent_dominating;
    bound_ = p.max_size ? *p.max_size : n_;
    for (int v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (c.required[i]) {
        root_.chosen.push_back(v);
      } else if (c.allowed[i]) {
        root_.candidates.set(v);
      }
      if (c.dominate[i]) root_.undominated.set(v);
    }
    for (int v : root_.chosen) {
      root_.undominated = root_.undominated.without(closed_[static_cast<std::size_t>(v)]);
      if (independent_) root_.candidates = root_.candidates.without(closed_[static_cast<std::size_t>(v)]);
    }
  }

  SearchResult run(std::atomic<std::uint64_t>& nodes, std::atomic<bool>& exhausted) {
    nodes_ = &nodes;
    exhausted_ = &exhausted;
    SearchResult result;

    // Split at the root into disjoint subtrees; each keeps its own
    // incumbent so the outcome is the same for any number of workers.
    std::vector<State> tasks;
    if (!root_.undominated.any()) {
      tasks.push_back(root_);
    } else {
      const int u = pick(root_);
      if (u >= 0) {
        State rest = root_;
        (closed_[static_cast<std::size_t>(u)] & root_.candidates).for_each([&](int c) {
          tasks.push_back(include(rest, c));
          rest.candidates.reset(c);
        });
      }
    }

    std::vector<BranchOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < tasks.size() && !exhausted_->load(); t = next++) {
        BranchOutcome& out = outcomes[t];
        out.best = bound_;
        dfs(tasks[t], out);
      }
    };
    const int threads = std::max(1, std::min<int>(p_.threads, static_cast<int>(tasks.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (exhausted_->load()) {
      throw BudgetExceeded("node budget of " + std::to_string(p_.node_budget) + " exhausted before the search finished");
    }

    int best = std::numeric_limits<int>::max();
    for (const auto& o : outcomes) {
      if (o.count > 0) best = std::min(best, o.best);
    }
    if (best != std::numeric_limits<int>::max()) {
      result.optimum = best;
      for (const auto& o : outcomes) {
        if (o.count == 0 || o.best != best) continue;
        result.count += o.count;
        for (const auto& w : o.witnesses) offer_witness(result.witnesses, w, p_.witness_cap);
      }
    }
    result.nodes_explored = nodes.load();
    return result;
  }

 private:
  struct State {
    std::vector<int> chosen;
    Bits<W> candidates;
    Bits<W> undominated;
  };

  State include(const State& s, int c) const {
    State t = s;
    t.chosen.push_back(c);
    t.candidates.reset(c);
    if (independent_) t.candidates = t.candidates.without(closed_[static_cast<std::size_t>(c)]);
    t.undominated = t.undominated.without(closed_[static_cast<std::size_t>(c)]);
    return t;
  }

  /// Undominated vertex with the fewest eligible dominators (lowest index on
  /// ties); -1 if some undominated vertex has none.
  int pick(const State& s) const {
    int best = -1;
    int fewest = std::numeric_limits<int>::max();
    bool dead = false;
    s.undominated.for_each([&](int u) {
      if (dead) return;
      const int options = closed_[static_cast<std::size_t>(u)].and_count(s.candidates);
      if (options == 0) {
        dead = true;
      } else if (options < fewest) {
        fewest = options;
        best = u;
      }
    });
    return dead ? -1 : best;
  }

  void dfs(State& s, BranchOutcome& out) {
    if ((++*nodes_) > p_.node_budget) {
      exhausted_->store(true);
    }
    if (exhausted_->load(std::memory_order_relaxed)) return;

    const int size = static_cast<int>(s.chosen.size());
    if (!s.undominated.any()) {
      if (size > out.best) return;
      if (size < out.best) {
        out.best = size;
        out.count = 0;
        out.witnesses.clear();
      }
      ++out.count;
      auto w = s.chosen;
      std::sort(w.begin(), w.end());
      offer_witness(out.witnesses, std::move(w), p_.witness_cap);
      return;
    }
    if (size + 1 > out.best) return;

    // Lower bound: every further vertex dominates at most max_cover of the rest.
    int max_cover = 0;
    s.candidates.for_each([&](int c) {
      max_cover = std::max(max_cover, closed_[static_cast<std::size_t>(c)].and_count(s.undominated));
    });
    if (max_cover == 0) return;
    const int remaining = s.undominated.count();
    const int needed = (remaining + max_cover - 1) / max_cover;
    if (size + needed > out.best) return;  // strict: co-optimal subtrees survive

    const int u = pick(s);
    if (u < 0) return;
    const Bits<W> options = closed_[static_cast<std::size_t>(u)] & s.candidates;
    State rest = s;
    options.for_each([&](int c) {
      State child = include(rest, c);
      dfs(child, out);
      rest.candidates.reset(c);
    });
  }

  const SearchProblem& p_;
  int n_;
  bool independent_ = false;
  int bound_ = 0;
  std::vector<Bits<W>> closed_;
  std::vector<Bits<W>> open_;
  State root_;
  std::atomic<std::uint64_t>* nodes_ = nullptr;
  std::atomic<bool>* exhausted_ = nullptr;
};

template <int W>
SearchResult run_solver(const SearchProblem& p, const Constraints& c) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  BranchAndBound<W> bb(p, c);
  return bb.run(nodes, exhausted);
}

}  // namespace

SearchResult solve(const SearchProblem& p) {
  const Constraints c = resolve(p);
  if (p.mode == SearchMode::independent_dominating && !c.required_independent) return SearchResult{};
  if (p.max_size && static_cast<int>(p.required.size()) > *p.max_size) return SearchResult{};
  const int n = p.graph.order();
  if (n <= 64) return run_solver<1>(p, c);
  if (n <= 128) return run_solver<2>(p, c);
  if (n <= 256) return run_solver<4>(p, c);
  if (n <= 512) return run_solver<8>(p, c);
  throw InputError("exact search supports at most 512 vertices");
}

namespace {

bool satisfies(const SearchProblem& p, const Constraints& c, const std::vector<int>& set, std::vector<char>& in) {
  const int n = p.graph.order();
  std::fill(in.begin(), in.end(), 0);
  for (int v : set) {
    if (v < 0 || v >= n || !c.allowed[static_cast<std::size_t>(v)]) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : p.required) {
    if (!in[static_cast<std::size_t>(v)]) return false;
  }
  if (p.mode == SearchMode::independent_dominating) {
    for (int v : set) {
      for (int w : p.graph.neighbours(v)) {
        if (in[static_cast<std::size_t>(w)]) return false;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!c.dominate[static_cast<std::size_t>(v)] || in[static_cast<std::size_t>(v)]) continue;
    const auto& nb = p.graph.neighbours(v);
    if (std::none_of(nb.begin(), nb.end(), [&](int w) { return in[static_cast<std::size_t>(w)] != 0; })) return false;
  }
  return true;
}

}  // namespace

bool is_feasible_solution(const SearchProblem& p, const std::vector<int>& set) {
  const Constraints c = resolve(p);
  std::vector<char> in(static_cast<std::size_t>(p.graph.order()), 0);
  return satisfies(p, c, set, in);
}

SearchResult brute_force_oracle(const SearchProblem& p) {
  const Constraints c = resolve(p);
  const int n = p.graph.order();
  if (n > kOracleMaxVertices && !(p.max_size && *p.max_size <= kOracleMaxDepth)) {
    throw InputError("brute-force oracle needs at most " + std::to_string(kOracleMaxVertices) +
                     " vertices or max_size <= " + std::to_string(kOracleMaxDepth));
  }
  std::vector<int> free;
  for (int v = 0; v < n; ++v) {
    if (c.allowed[static_cast<std::size_t>(v)] && !c.required[static_cast<std::size_t>(v)]) free.push_back(v);
  }
  std::vector<int> base = p.required;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  SearchResult result;
  std::vector<char> scratch(static_cast<std::size_t>(n), 0);
  const int limit = std::min<int>(p.max_size.value_or(n), static_cast<int>(base.size() + free.size()));
  // Plain lexicographic combinations of `free`, one size at a time.
  for (int size = static_cast<int>(base.size()); size <= limit && !result.optimum; ++size) {
    const int extra = size - static_cast<int>(base.size());
    std::vector<int> pos(static_cast<std::size_t>(extra));
    for (int i = 0; i < extra; ++i) pos[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(free.size());
    while (true) {
      ++result.nodes_explored;
      std::vector<int> set = base;
      for (int i : pos) set.push_back(free[static_cast<std::size_t>(i)]);
      if (satisfies(p, c, set, scratch)) {
        ++result.count;
        std::sort(set.begin(), set.end());
        offer_witness(result.witnesses, std::move(set), p.witness_cap);
      }
      int i = extra - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - extra + i) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < extra; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (result.count > 0) result.optimum = size;
  }
  return result;
}

}  // namespace bowtie
