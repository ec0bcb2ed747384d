#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bowtie/hypergraph.hpp"

namespace bowtie {

/// True iff adding e to h creates a bow tie through e, i.e. some edge meets
/// e in exactly one vertex. Throws InputError if e is already an edge.
bool creates_bowtie(const Hypergraph& h, const KSet& e);

/// First k-set (colex order) absent from h whose addition creates no bow tie.
/// Empty iff h is semi-saturated.
std::optional<KSet> find_unsaturated_kset(const Hypergraph& h);

inline bool is_semi_saturated(const Hypergraph& h) { return !find_unsaturated_kset(h).has_value(); }

/// Verdicts with certificates for both failure modes.
struct SaturationReport {
  std::optional<std::pair<KSet, KSet>> bowtie;  // present iff h contains a bow tie
  std::optional<KSet> counterexample;           // present iff h is not semi-saturated

  bool bowtie_free() const { return !bowtie.has_value(); }
  bool semi_saturated() const { return !counterexample.has_value(); }
  bool saturated() const { return bowtie_free() && semi_saturated(); }
};

SaturationReport check_saturation(const Hypergraph& h);

inline bool is_saturated(const Hypergraph& h) { return check_saturation(h).saturated(); }

enum class SatKind { sat, wsat };

std::string to_string(SatKind kind);
SatKind parse_sat_kind(const std::string& s);

/// A known value or a proven bracket [lower, upper].
struct ClosedForm {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  std::string basis;  // short human-readable justification
};

/// Closed-form sat_k(n, B_k) / wsat_k(n, B_k) for k in {2, 3, 4}. For (4, wsat)
/// returns an interval unless the value is pinned. Throws Unsupported for
/// any other k.
ClosedForm closed_form(int n, int k, SatKind kind);

}  // namespace bowtie
