#pragma once

#include <vector>

#include "bowtie/hypergraph.hpp"
#include "oracle.hpp"

namespace testing_helpers {

inline bowtie::KSet ks(std::initializer_list<int> xs) { return bowtie::KSet::from_elements(xs); }

inline bowtie::Hypergraph make(int n, int k, const std::vector<oracle::Set>& edges) {
  std::vector<bowtie::KSet> out;
  for (const auto& e : edges) out.push_back(bowtie::KSet::from_elements(e, n));
  return bowtie::Hypergraph(n, k, out);
}

inline std::vector<oracle::Set> sets_of(const bowtie::Hypergraph& h) {
  std::vector<oracle::Set> out;
  for (const auto& e : h.edges()) out.push_back(e.elements());
  return out;
}

}  // namespace testing_helpers
