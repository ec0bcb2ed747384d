#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bowtie/graph.hpp"

namespace bowtie {

enum class SearchMode { dominating, independent_dominating };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& s);

/// Minimum (independent) dominating set problem with side constraints.
///
/// A solution S satisfies required ⊆ S ⊆ allowed and dominates every vertex
/// of `dominate`; in independent_dominating mode S is also independent.
/// When `dominate` is unset it defaults to `allowed`: vertices outside
/// `allowed` neither join S nor need domination.
struct SearchProblem {
  SimpleGraph graph;
  SearchMode mode = SearchMode::independent_dominating;
  std::vector<int> required;
  std::optional<std::vector<int>> allowed;   // default: all vertices
  std::optional<std::vector<int>> dominate;  // default: allowed
  std::optional<int> max_size;               // only solutions of at most this size count
  std::size_t witness_cap = 16;
  std::uint64_t node_budget = 4'000'000'000ULL;
  int threads = 1;
};

struct SearchResult {
  std::optional<int> optimum;  // nullopt: infeasible (within max_size)
  std::uint64_t count = 0;     // exact number of optimum solutions
  std::vector<std::vector<int>> witnesses;  // sorted sets, lexicographic order, at most witness_cap
  std::uint64_t nodes_explored = 0;

  bool feasible() const { return optimum.has_value(); }
};

/// Branch and bound. Counts every optimum exactly; the result does not
/// depend on `threads`. Throws BudgetExceeded when node_budget runs out and
/// InputError on malformed problems (indices out of range, required ⊄ allowed).
SearchResult solve(const SearchProblem& p);

/// Exhaustive enumeration by increasing size, sharing no pruning logic with
/// solve. Only for graphs with at most kOracleMaxVertices vertices, or when
/// max_size <= kOracleMaxDepth.
SearchResult brute_force_oracle(const SearchProblem& p);

inline constexpr int kOracleMaxVertices = 40;
inline constexpr int kOracleMaxDepth = 6;

/// True iff `set` satisfies every constraint of p (size bound excluded).
bool is_feasible_solution(const SearchProblem& p, const std::vector<int>& set);

}  // namespace bowtie
