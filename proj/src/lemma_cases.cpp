#include "bowtie/lemma_cases.hpp"

#include <algorithm>

#include "bowtie/johnson.hpp"

namespace bowtie {

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::p3:
      return "P3";
    case CaseId::p4:
      return "P4";
    case CaseId::s4:
      return "S4";
  }
  return "?";
}

namespace {

int least_x(int z, int shift) {
  int x = 0;
  while (static_cast<int>(binomial(x + shift, 2)) < z) ++x;
  return x;
}

}  // namespace

std::vector<CaseReport> p3_verify(const P3Options& options) {
  const KSet first = KSet::from_elements({1, 2, 3, 4}, 6);
  const KSet second = KSet::from_elements({3, 4, 5, 6}, 6);

  std::vector<KSet> triples;
  for_each_kset(6, 3, [&](const KSet& s) {
    if (!options.base_filter || (intersection_size(s, first) != 1 && intersection_size(s, second) != 1)) {
      triples.push_back(s);
    }
    return true;
  });
  std::vector<KSet> quads;
  for_each_kset(6, 4, [&](const KSet& a) {
    quads.push_back(a);
    return true;
  });

  const auto t = triples.size();
  std::vector<CaseReport> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << t); ++choice) {
    std::vector<KSet> s;
    for (std::size_t i = 0; i < t; ++i) {
      if ((choice >> i) & 1) s.push_back(triples[i]);
    }
    bool intersecting = true;
    for (std::size_t i = 0; i < s.size() && intersecting; ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (intersection_size(s[i], s[j]) == 0) {
          intersecting = false;
          break;
        }
      }
    }
    if (!intersecting) continue;

    CaseReport r;
    r.id = CaseId::p3;
    r.variant = options.base_filter ? "primary" : "no-base-filter";
    r.sets = s;
    for (const KSet& a : quads) {
      r.y += std::all_of(s.begin(), s.end(), [&](const KSet& x) { return intersection_size(a, x) >= 2; }) ? 1 : 0;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) r.z += intersection_size(s[i], s[j]) == 1 ? 1 : 0;
    }
    r.x_min = least_x(r.z, 0);
    r.x_min_alt = least_x(r.z, 1);
    r.pass = (options.alternative_bound ? r.x_min_alt : r.x_min) + r.y >= 6;
    if (options.alternative_bound) r.variant += "+alt-bound";
    out.push_back(std::move(r));
  }
  return out;
}

CaseReport constrained_case(CaseId id, const std::string& variant, const std::vector<KSet>& required,
                            const std::vector<KSet>& external, int threshold, int threads) {
  static const JohnsonGraph j = JohnsonGraph::build(8, 4);
  CaseReport r;
  r.id = id;
  r.variant = variant;
  r.sets = external;
  r.case_edges = required;

  auto allowed_set = [&](const KSet& a) {
    return std::none_of(external.begin(), external.end(), [&](const KSet& t) { return intersection_size(a, t) == 1; });
  };
  for (std::size_t a = 0; a < required.size(); ++a) {
    if (!allowed_set(required[a])) {
      r.vacuous = true;
      r.vacuous_reason = "required edge " + required[a].to_string() + " meets an external triple in one vertex";
    }
    for (std::size_t b = a + 1; b < required.size() && !r.vacuous; ++b) {
      if (intersection_size(required[a], required[b]) == 1) {
        r.vacuous = true;
        r.vacuous_reason = "required edges " + required[a].to_string() + " and " + required[b].to_string() +
                           " form a bow tie";
      }
    }
  }
  if (r.vacuous) {
    r.pass = true;
    return r;
  }

  SearchProblem p;
  p.graph = j.graph();
  p.mode = SearchMode::independent_dominating;
  for (const KSet& e : required) p.required.push_back(static_cast<int>(j.index_of(e)));
  std::vector<int> allowed;
  for (std::uint64_t i = 0; i < j.vertex_count(); ++i) {
    if (allowed_set(j.vertex(i))) allowed.push_back(static_cast<int>(i));
  }
  p.allowed = allowed;
  p.witness_cap = 1;
  p.threads = threads;
  const SearchResult res = solve(p);
  r.optimum = res.optimum;
  r.optimum_count = res.count;
  r.nodes = res.nodes_explored;
  // An infeasible instance admits no saturated completion at all.
  r.pass = !res.optimum || *res.optimum >= threshold;
  return r;
}

namespace {

std::vector<std::vector<KSet>> all_subsets(const std::vector<KSet>& items) {
  std::vector<std::vector<KSet>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << items.size()); ++m) {
    std::vector<KSet> s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((m >> i) & 1) s.push_back(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

KSet q(std::initializer_list<int> vs) { return KSet::from_elements(vs, 8); }

}  // namespace

std::vector<CaseReport> p4_verify(int threads) {
  const std::vector<KSet> path = {q({1, 2, 3, 4}), q({3, 4, 5, 6}), q({5, 6, 7, 8})};
  const std::vector<std::pair<std::string, std::vector<KSet>>> case_edges = {
      {"A", {q({1, 3, 5, 7})}},
      {"B", {q({1, 3, 5, 6}), q({3, 4, 5, 7})}},
  };
  const std::vector<KSet> triples = {q({1, 3, 4}), q({5, 6, 7})};
  std::vector<CaseReport> out;
  for (const auto& [label, extra] : case_edges) {
    auto required = path;
    required.insert(required.end(), extra.begin(), extra.end());
    for (const auto& y : all_subsets(triples)) out.push_back(constrained_case(CaseId::p4, label, required, y, 8, threads));
  }
  return out;
}

std::vector<CaseReport> s4_verify(int threads) {
  const std::vector<KSet> required = {q({1, 2, 3, 4}), q({1, 2, 5, 6}), q({1, 2, 7, 8}), q({1, 3, 5, 7})};
  std::vector<KSet> triples;
  for (int x = 3; x <= 8; ++x) triples.push_back(q({1, 2, x}));
  std::vector<CaseReport> out;
  for (const auto& y : all_subsets(triples)) out.push_back(constrained_case(CaseId::s4, "primary", required, y, 8, threads));
  return out;
}

CaseSummary summarise(const std::vector<CaseReport>& reports) {
  CaseSummary s;
  if (!reports.empty()) {
    s.id = reports.front().id;
    s.variant = reports.front().id == CaseId::p3 ? reports.front().variant : "all";
  }
  for (const auto& r : reports) {
    ++s.cases;
    if (r.vacuous) {
      ++s.vacuous;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    std::optional<int> value;
    if (r.id == CaseId::p3) {
      value = r.x_min + r.y;
    } else if (!r.vacuous) {
      value = r.optimum;
    }
    if (value && (!s.min_value || *value < *s.min_value)) s.min_value = value;
  }
  return s;
}

}  // namespace bowtie
