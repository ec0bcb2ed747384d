#include "bowtie/json_io.hpp"

#include <algorithm>

#include "bowtie/error.hpp"

namespace bowtie {

using nlohmann::json;

namespace {

std::vector<int> vertex_list(const json& j, const std::optional<JohnsonGraph>& johnson, const char* field) {
  if (!j.is_array()) throw InputError(std::string("'") + field + "' must be an array");
  std::vector<int> out;
  for (const auto& item : j) {
    if (item.is_number_integer()) {
      out.push_back(item.get<int>());
    } else if (item.is_array()) {
      if (!johnson) throw InputError(std::string("k-set entries in '") + field + "' need a Johnson graph");
      std::vector<int> labels;
      for (const auto& v : item) {
        if (!v.is_number_integer()) throw InputError(std::string("non-integer label in '") + field + "'");
        labels.push_back(v.get<int>());
      }
      std::sort(labels.begin(), labels.end());
      out.push_back(static_cast<int>(johnson->index_of(KSet::from_elements(labels, johnson->n()))));
    } else {
      throw InputError(std::string("entries of '") + field + "' must be indices or k-sets");
    }
  }
  return out;
}

template <typename T>
T number(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string("'") + field + "' must be a non-negative integer");
  }
  return j.get<T>();
}

}  // namespace

ProblemSpec problem_from_json(const json& j) {
  if (!j.is_object()) throw InputError("problem description must be a JSON object");
  if (!j.contains("graph")) throw InputError("problem description lacks 'graph'");
  const json& g = j.at("graph");
  ProblemSpec spec;
  if (g.contains("johnson")) {
    const json& jj = g.at("johnson");
    int n = 0;
    int k = 0;
    if (jj.is_array() && jj.size() == 2) {
      n = number<int>(jj[0], "johnson n");
      k = number<int>(jj[1], "johnson k");
    } else if (jj.is_object()) {
      n = number<int>(jj.at("n"), "n");
      k = number<int>(jj.at("k"), "k");
    } else {
      throw InputError("'johnson' must be [n, k] or {\"n\":..,\"k\":..}");
    }
    spec.johnson = JohnsonGraph::build(n, k);
    spec.problem.graph = spec.johnson->graph();
  } else if (g.contains("file")) {
    spec.problem.graph = load_graph(g.at("file").get<std::string>());
  } else if (g.contains("graph6")) {
    spec.problem.graph = parse_graph6(g.at("graph6").get<std::string>());
  } else if (g.contains("edge_list")) {
    spec.problem.graph = parse_edge_list(g.at("edge_list").get<std::string>());
  } else {
    throw InputError("'graph' needs one of johnson, file, graph6, edge_list");
  }
  if (j.contains("mode")) spec.problem.mode = parse_search_mode(j.at("mode").get<std::string>());
  if (j.contains("required")) spec.problem.required = vertex_list(j.at("required"), spec.johnson, "required");
  if (j.contains("allowed")) spec.problem.allowed = vertex_list(j.at("allowed"), spec.johnson, "allowed");
  if (j.contains("dominate")) spec.problem.dominate = vertex_list(j.at("dominate"), spec.johnson, "dominate");
  if (j.contains("max_size")) spec.problem.max_size = number<int>(j.at("max_size"), "max_size");
  if (j.contains("witness_cap")) spec.problem.witness_cap = number<std::size_t>(j.at("witness_cap"), "witness_cap");
  if (j.contains("node_budget")) spec.problem.node_budget = number<std::uint64_t>(j.at("node_budget"), "node_budget");
  if (j.contains("threads")) spec.problem.threads = std::max(1, number<int>(j.at("threads"), "threads"));
  return spec;
}

json to_json(const KSet& s) { return s.elements(); }

json to_json(const SearchResult& r, const std::optional<JohnsonGraph>& johnson) {
  json out;
  out["feasible"] = r.feasible();
  out["optimum"] = r.optimum ? json(*r.optimum) : json(nullptr);
  out["count"] = r.count;
  out["witnesses"] = r.witnesses;
  if (johnson) {
    json sets = json::array();
    for (const auto& w : r.witnesses) {
      json one = json::array();
      for (int i : w) one.push_back(to_json(johnson->vertex(static_cast<std::uint64_t>(i))));
      sets.push_back(std::move(one));
    }
    out["witness_ksets"] = std::move(sets);
  }
  out["nodes_explored"] = r.nodes_explored;
  return out;
}

json to_json(const SaturationReport& r) {
  json out;
  out["bowtie_free"] = r.bowtie_free();
  out["semi_saturated"] = r.semi_saturated();
  out["saturated"] = r.saturated();
  if (r.bowtie) out["bowtie"] = {to_json(r.bowtie->first), to_json(r.bowtie->second)};
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  if (!r.saturated()) {
    out["failure"] = !r.bowtie_free() && !r.semi_saturated() ? "contains_bowtie_and_not_semi_saturated"
                     : !r.bowtie_free()                      ? "contains_bowtie"
                                                             : "not_semi_saturated";
  }
  return out;
}

json to_json(const CaseReport& r) {
  json out;
  out["case"] = to_string(r.id);
  out["variant"] = r.variant;
  json sets = json::array();
  for (const auto& s : r.sets) sets.push_back(to_json(s));
  out[r.id == CaseId::p3 ? "S" : "Y"] = std::move(sets);
  if (r.id == CaseId::p3) {
    out["y"] = r.y;
    out["z"] = r.z;
    out["x_min"] = r.x_min;
    out["x_min_alt"] = r.x_min_alt;
  } else {
    json edges = json::array();
    for (const auto& e : r.case_edges) edges.push_back(to_json(e));
    out["required"] = std::move(edges);
    out["vacuous"] = r.vacuous;
    if (r.vacuous) out["vacuous_reason"] = r.vacuous_reason;
    out["optimum"] = r.optimum ? json(*r.optimum) : json(nullptr);
    out["optimum_count"] = r.optimum_count;
    out["nodes"] = r.nodes;
  }
  out["pass"] = r.pass;
  return out;
}

json to_json(const CaseSummary& s) {
  json out;
  out["case"] = to_string(s.id);
  out["variant"] = s.variant;
  out["cases"] = s.cases;
  out["passed"] = s.passed;
  out["vacuous"] = s.vacuous;
  out["failed"] = s.failed;
  out["min_value"] = s.min_value ? json(*s.min_value) : json(nullptr);
  out["pass"] = s.pass();
  return out;
}

json to_json(const ClosedForm& c) {
  json out;
  out["lower"] = c.lower;
  out["upper"] = c.upper;
  out["exact"] = c.exact;
  out["basis"] = c.basis;
  return out;
}

}  // namespace bowtie
