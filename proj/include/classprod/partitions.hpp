#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classprod/bigint.hpp"
#include "classprod/limits.hpp"

namespace classprod {

/// An integer partition of n, read as the cycle type of a permutation.
/// Parts are kept in non-increasing order so equality is multiset equality.
class CycleType {
 public:
  CycleType() = default;
  /// Parts in any order; every part must be positive and there must be at
  /// least one.
  explicit CycleType(std::vector<int> parts);
  CycleType(std::initializer_list<int> parts)
      : CycleType(std::vector<int>(parts)) {}

  /// The type [1^n].
  static CycleType identity(int n);
  /// Parses "3,2,1,1" (any order, whitespace around parts tolerated).
  static CycleType parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Multiplicity of the part `value`.
  int multiplicity(int value) const noexcept;
  bool is_identity() const noexcept { return largest_part() == 1; }
  /// +1 for even permutations, -1 for odd ones.
  int sign() const noexcept { return (n_ - length()) % 2 == 0 ? 1 : -1; }
  /// Number of points moved by a permutation of this type.
  int moved_points() const noexcept;

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const CycleType& a,
                                          const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
std::vector<CycleType> partitions_of(int n, const Limits& limits = {});

/// n! / z_t.
BigInt class_size(const CycleType& t);
/// z_t = prod_i i^{m_i} m_i!, the centralizer order.
BigInt centralizer_order(const CycleType& t);

int fixed_point_count(const CycleType& t) noexcept;
inline bool is_fixed_point_free(const CycleType& t) noexcept {
  return fixed_point_count(t) == 0;
}

/// Multiset union of parts; the result is a partition of t1.n() + t2.n().
CycleType type_union(const CycleType& t1, const CycleType& t2);

/// Unordered pair, stored with the lexicographically larger type first.
using TypePair = std::pair<CycleType, CycleType>;
TypePair make_type_pair(CycleType a, CycleType b);

/// The pairs of types with exactly two classes in their product for n > 5:
/// ([2^{n/2}], transposition) and ([2^{n/2}], 3-cycle) when n is even,
/// ([3^{n/3}], transposition) when 3 divides n.
std::vector<TypePair> two_class_product_pairs(int n);

}  // namespace classprod
