#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bowtie {

/// Bit v-1 is set iff vertex label v is present.
using VertexMask = unsigned __int128;

inline constexpr int kMaxVertices = 128;

inline int popcount(VertexMask m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

/// Index of the lowest set bit; m must be nonzero.
inline int lowest_bit(VertexMask m) {
  const auto lo = static_cast<std::uint64_t>(m);
  return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
}

inline VertexMask vertex_bit(int label) { return VertexMask{1} << (label - 1); }

/// Binomial coefficient; saturates at UINT64_MAX on overflow. Defined for
/// 0 <= n <= kMaxVertices, returns 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// A k-element subset of [1..n]. Stored as a bit mask, so ordering by the
/// mask value is colex order among sets of equal size.
class KSet {
 public:
  KSet() = default;

  /// Strictly increasing labels in [1..n]; throws InputError otherwise.
  static KSet from_elements(std::span<const int> elements, int n);
  static KSet from_elements(std::initializer_list<int> elements, int n = kMaxVertices) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()), n);
  }
  static KSet from_mask(VertexMask mask) { return KSet(mask); }

  VertexMask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int label) const { return (mask_ & vertex_bit(label)) != 0; }
  /// Largest label, or 0 for the empty set.
  int max_element() const;
  std::vector<int> elements() const;
  std::string to_string() const;

  friend bool operator==(const KSet&, const KSet&) = default;
  friend std::strong_ordering operator<=>(const KSet& a, const KSet& b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  explicit KSet(VertexMask mask) : mask_(mask) {}
  VertexMask mask_ = 0;
};

inline int intersection_size(const KSet& a, const KSet& b) { return popcount(a.mask() & b.mask()); }

struct KSetHash {
  std::size_t operator()(const KSet& s) const noexcept {
    const auto lo = static_cast<std::uint64_t>(s.mask());
    const auto hi = static_cast<std::uint64_t>(s.mask() >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

/// Colex rank: sum over positions i (1-based) of C(element_i - 1, i).
std::uint64_t colex_rank(const KSet& s);
/// Inverse of colex_rank for sets of size k.
KSet colex_unrank(std::uint64_t rank, int k);

/// Visits every k-subset of [1..n] in colex order. The visitor returns false
/// to stop early; the function returns false iff it was stopped.
bool for_each_kset(int n, int k, const std::function<bool(const KSet&)>& visit);

/// Mask successor in colex order (Gosper's hack). mask must be nonzero.
inline VertexMask next_colex(VertexMask x) {
  const VertexMask c = x & (~x + 1);
  const VertexMask r = x + c;
  return (((r ^ x) >> 2) >> lowest_bit(x)) | r;
}

}  // namespace bowtie
