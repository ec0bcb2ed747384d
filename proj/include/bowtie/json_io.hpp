#pragma once

#include <optional>

#include <json.hpp>

#include "bowtie/exact_search.hpp"
#include "bowtie/johnson.hpp"
#include "bowtie/lemma_cases.hpp"
#include "bowtie/saturation.hpp"

namespace bowtie {

/// A search problem as described on the command line, plus the Johnson
/// graph it came from (if any) so k-sets can be translated.
struct ProblemSpec {
  SearchProblem problem;
  std::optional<JohnsonGraph> johnson;
};

/// Parses a problem description:
///   {"graph": {"johnson": {"n": 8, "k": 4}} | {"file": "g.el"} | {"graph6": "D??"},
///    "mode": "independent_dominating" | "dominating",
///    "required" / "allowed" / "dominate": [index, ...] or [[k-set], ...] (Johnson only),
///    "max_size", "witness_cap", "node_budget", "threads"}
/// Throws InputError on any malformed field.
ProblemSpec problem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& r, const std::optional<JohnsonGraph>& johnson = std::nullopt);
nlohmann::json to_json(const SaturationReport& r);
nlohmann::json to_json(const KSet& s);
nlohmann::json to_json(const CaseReport& r);
nlohmann::json to_json(const CaseSummary& s);
nlohmann::json to_json(const ClosedForm& c);

}  // namespace bowtie
