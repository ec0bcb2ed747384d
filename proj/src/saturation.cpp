#include "bowtie/saturation.hpp"

#include <algorithm>

#include "bowtie/error.hpp"

namespace bowtie {

bool creates_bowtie(const Hypergraph& h, const KSet& e) {
  if (h.contains(e)) throw InputError("k-set " + e.to_string() + " is already an edge");
  return std::any_of(h.edges().begin(), h.edges().end(),
                     [&](const KSet& f) { return intersection_size(e, f) == 1; });
}

std::optional<KSet> find_unsaturated_kset(const Hypergraph& h) {
  const int n = h.order();
  const int k = h.uniformity();
  if (k > n) return std::nullopt;
  std::vector<VertexMask> masks;
  masks.reserve(h.size());
  for (const KSet& e : h.edges()) masks.push_back(e.mask());

  std::optional<KSet> found;
  for_each_kset(n, k, [&](const KSet& candidate) {
    if (h.contains(candidate)) return true;
    const VertexMask c = candidate.mask();
    for (VertexMask f : masks) {
      const VertexMask both = c & f;
      // Exactly one common vertex: nonzero and a power of two.
      if (both != 0 && (both & (both - 1)) == 0) return true;
    }
    found = candidate;
    return false;
  });
  return found;
}

SaturationReport check_saturation(const Hypergraph& h) {
  return SaturationReport{find_bowtie(h), find_unsaturated_kset(h)};
}

std::string to_string(SatKind kind) { return kind == SatKind::sat ? "sat" : "wsat"; }

SatKind parse_sat_kind(const std::string& s) {
  if (s == "sat") return SatKind::sat;
  if (s == "wsat") return SatKind::wsat;
  throw InputError("unknown saturation kind '" + s + "' (expected sat or wsat)");
}

namespace {

ClosedForm exact(long long value, std::string basis) { return ClosedForm{value, value, true, std::move(basis)}; }

long long sat4(int n) {
  if (n <= 6) return static_cast<long long>(binomial(n, 4));
  if (n <= 8) return n;
  return n - 3;
}

/// Whether (n - 4) / 13 splits into blocks of 4, 5 and 6.
bool sharp_blocks_exist(int n) {
  if (n < 4 || (n - 4) % 13 != 0) return false;
  const int t = (n - 4) / 13;
  for (int a = 0; 4 * a <= t; ++a) {
    for (int b = 0; 4 * a + 5 * b <= t; ++b) {
      if ((t - 4 * a - 5 * b) % 6 == 0) return true;
    }
  }
  return false;
}

}  // namespace

ClosedForm closed_form(int n, int k, SatKind kind) {
  if (n < 1) throw InputError("n must be positive");
  if (k < 2 || k > 4) throw Unsupported("no closed form for k = " + std::to_string(k));
  if (n < k) return exact(0, "no k-sets exist");

  if (k == 2) return exact(n / 2, "floor(n/2) independent edges");
  if (k == 3) {
    const long long v = n / 3 + 3 * ((n - 1) % 3 == 0 ? 1 : 0) + 2 * ((n - 2) % 3 == 0 ? 1 : 0);
    return exact(v, "floor(n/3) + 3[3|n-1] + 2[3|n-2]");
  }

  if (kind == SatKind::sat) {
    if (n <= 6) return exact(sat4(n), "C(n,4) for n <= 6");
    if (n <= 8) return exact(sat4(n), "n for n in {7,8}");
    return exact(sat4(n), "n-3 for n >= 9");
  }

  // wsat_4. Two 4-sets meeting in one vertex span 7 vertices, so below 7
  // nothing can be semi-saturated except the complete hypergraph.
  if (n <= 6) return exact(sat4(n), "C(n,4): no bow tie fits on n <= 6 vertices");
  long long upper = sat4(n);
  if (sharp_blocks_exist(n)) upper = std::min(upper, static_cast<long long>((6 * n - 11) / 13));
  if (n >= 100) {
    const long long lower = (6LL * n - 11 + 12) / 13;  // ceil((6n - 11) / 13)
    if (n % 13 == 4) return exact(lower, "(6n-11)/13, sharp for n = 4 mod 13, n >= 100");
    return ClosedForm{lower, upper, lower == upper, "[ceil((6n-11)/13), best construction]"};
  }
  // At most three isolated vertices and each edge covers four vertices.
  const long long lower = (n - 3 + 3) / 4;
  return ClosedForm{lower, upper, lower == upper, "[ceil((n-3)/4), best construction]"};
}

}  // namespace bowtie
