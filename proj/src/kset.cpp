#include "bowtie/kset.hpp"

#include <array>
#include <limits>
#include <sstream>

#include "bowtie/error.hpp"

namespace bowtie {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

BinomialTable make_binomials() {
  BinomialTable t{};
  constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();
  for (int n = 0; n <= kMaxVertices; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t a = t[n - 1][k - 1];
      const std::uint64_t b = k <= n - 1 ? t[n - 1][k] : 0;
      t[n][k] = (a > kSat - b) ? kSat : a + b;
    }
  }
  return t;
}

const BinomialTable& binomials() {
  static const BinomialTable table = make_binomials();
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxVertices) throw InputError("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  return binomials()[n][k];
}

KSet KSet::from_elements(std::span<const int> elements, int n) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range: " + std::to_string(n));
  VertexMask mask = 0;
  int previous = 0;
  for (int v : elements) {
    if (v < 1 || v > n) {
      throw InputError("vertex label " + std::to_string(v) + " outside [1.." + std::to_string(n) + "]");
    }
    if (v <= previous) throw InputError("vertex labels must be strictly increasing");
    mask |= vertex_bit(v);
    previous = v;
  }
  return KSet(mask);
}

int KSet::max_element() const {
  if (mask_ == 0) return 0;
  const auto hi = static_cast<std::uint64_t>(mask_ >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  return 64 - __builtin_clzll(static_cast<std::uint64_t>(mask_));
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (VertexMask m = mask_; m != 0; m &= m - 1) out.push_back(lowest_bit(m) + 1);
  return out;
}

std::string KSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : elements()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::uint64_t colex_rank(const KSet& s) {
  std::uint64_t rank = 0;
  int position = 1;
  for (int v : s.elements()) rank += binomial(v - 1, position++);
  return rank;
}

KSet colex_unrank(std::uint64_t rank, int k) {
  VertexMask mask = 0;
  for (int position = k; position >= 1; --position) {
    // Largest c with C(c, position) <= rank; element is c + 1.
    int c = position - 1;
    while (c + 1 <= kMaxVertices && binomial(c + 1, position) <= rank) ++c;
    rank -= binomial(c, position);
    mask |= vertex_bit(c + 1);
  }
  return KSet::from_mask(mask);
}

bool for_each_kset(int n, int k, const std::function<bool(const KSet&)>& visit) {
  if (k < 0 || k > n) return true;
  const std::uint64_t total = binomial(n, k);
  if (k == 0) return visit(KSet{});
  VertexMask mask = k == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << k) - 1;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!visit(KSet::from_mask(mask))) return false;
    if (i + 1 < total) mask = next_colex(mask);
  }
  return true;
}

}  // namespace bowtie
