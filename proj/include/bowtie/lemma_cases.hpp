#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bowtie/exact_search.hpp"
#include "bowtie/kset.hpp"

namespace bowtie {

enum class CaseId { p3, p4, s4 };

std::string to_string(CaseId id);

/// One verified sub-case of the finite case analysis.
struct CaseReport {
  CaseId id = CaseId::p3;
  std::string variant;  // which enumeration produced it ("primary", "no-base-filter", case-edge label)
  std::vector<KSet> sets;  // P3: the triple system S; P4/S4: the external triples Y
  std::vector<KSet> case_edges;  // P4/S4: required edges of the instance

  // P3 quantities.
  int y = 0;
  int z = 0;
  int x_min = 0;      // least x with C(x,2) >= z
  int x_min_alt = 0;  // least x with C(x+1,2) >= z

  // P4/S4 quantities.
  bool vacuous = false;
  std::string vacuous_reason;
  std::optional<int> optimum;
  std::uint64_t optimum_count = 0;
  std::uint64_t nodes = 0;

  bool pass = false;
};

struct CaseSummary {
  CaseId id = CaseId::p3;
  std::string variant;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t vacuous = 0;
  std::size_t failed = 0;
  std::optional<int> min_value;  // P3: min x_min + y; P4/S4: min constrained optimum
  bool pass() const { return failed == 0; }
};

struct P3Options {
  /// Keep only triples s with |s ∩ [4]| != 1 and |s ∩ [3..6]| != 1.
  bool base_filter = true;
  /// Pass criterion uses C(x+1,2) >= z instead of C(x,2) >= z.
  bool alternative_bound = false;
};

/// Every triple system S ⊆ C([6],3) without disjoint members (and, by
/// default, compatible with the base edges [4] and [3..6]); pass iff
/// x_min + y >= 6.
std::vector<CaseReport> p3_verify(const P3Options& options = {});

/// Constrained minimum maximal independent sets in J(8,4,1) around the path
/// [4], [3..6], [5..8]; pass iff the optimum is at least 8.
std::vector<CaseReport> p4_verify(int threads = 1);

/// Same for the star {1,2,3,4}, {1,2,5,6}, {1,2,7,8} plus {1,3,5,7}.
std::vector<CaseReport> s4_verify(int threads = 1);

CaseSummary summarise(const std::vector<CaseReport>& reports);

/// Building block shared by P4 and S4: required edges on J(8,4,1), the
/// external triples Y cutting the allowed universe.
CaseReport constrained_case(CaseId id, const std::string& variant, const std::vector<KSet>& required,
                            const std::vector<KSet>& external, int threshold, int threads);

}  // namespace bowtie
