#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classprod/bigint.hpp"
#include "classprod/limits.hpp"
#include "classprod/partitions.hpp"

namespace classprod {

/// C_lhs * C_rhs as a union of classes. components[nu] is the number of ways
/// a fixed element of C_nu factors as x * y with x in C_lhs, y in C_rhs.
struct ClassProduct {
  CycleType lhs;
  CycleType rhs;
  /// Ordered reverse-lexicographically, like partitions_of().
  std::map<CycleType, BigInt, std::greater<>> components;

  int n() const noexcept { return lhs.n(); }
  /// Number of distinct classes in the product.
  int eta() const noexcept { return static_cast<int>(components.size()); }
  bool contains(const CycleType& t) const { return components.count(t) != 0; }
};

/// Irreducible characters of S_n. Rows are irreducibles and columns are
/// classes, both indexed by partitions_of(n).
class CharacterTable {
 public:
  explicit CharacterTable(int n, const Limits& limits = {});

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(partitions_.size()); }
  /// Labels of both rows and columns.
  const std::vector<CycleType>& partitions() const noexcept { return partitions_; }
  const std::vector<CycleType>& irreducibles() const noexcept { return partitions_; }
  const std::vector<CycleType>& classes() const noexcept { return partitions_; }

  int index_of(const CycleType& t) const;
  std::int64_t value(int irrep, int cls) const {
    return values_[static_cast<std::size_t>(irrep) * partitions_.size() + static_cast<std::size_t>(cls)];
  }
  std::int64_t value(const CycleType& irrep, const CycleType& cls) const {
    return value(index_of(irrep), index_of(cls));
  }
  const BigInt& dim(int irrep) const { return dims_[static_cast<std::size_t>(irrep)]; }
  const std::vector<BigInt>& dims() const noexcept { return dims_; }
  const BigInt& class_size(int cls) const { return class_sizes_[static_cast<std::size_t>(cls)]; }
  const BigInt& group_order() const noexcept { return order_; }

  /// Sum over irreducibles of chi(x) chi(y) chi(z) * (n! / chi(1)). The
  /// structure constant is |C_x| |C_y| times this, divided by (n!)^2.
  BigInt weighted_triple_sum(int x, int y, int z) const;

 private:
  int n_;
  std::vector<CycleType> partitions_;
  std::vector<std::int64_t> values_;
  std::vector<BigInt> dims_;
  std::vector<BigInt> class_sizes_;
  std::vector<BigInt> index_ratio_;  // n! / chi(1)
  BigInt order_;
};

/// Shared, immutable table for S_n; built once per n.
std::shared_ptr<const CharacterTable> character_table(int n, const Limits& limits = {});

/// chi_irrep(cls) by the Murnaghan-Nakayama rule (memoised, thread-safe).
std::int64_t mn_character(const CycleType& irrep, const CycleType& cls);

/// a_{lhs,rhs}^{out}, computed from the character table in exact arithmetic.
BigInt structure_constant(const CycleType& lhs, const CycleType& rhs, const CycleType& out,
                          const Limits& limits = {});

enum class Engine { brute, character, automatic };

std::string to_string(Engine engine);
Engine parse_engine(const std::string& text);

/// Enumerates the smaller of the two classes against a fixed representative
/// of the other.
ClassProduct product_types_bruteforce(const CycleType& lhs, const CycleType& rhs,
                                      const Limits& limits = {});

ClassProduct product_types_character(const CycleType& lhs, const CycleType& rhs,
                                     const Limits& limits = {});

/// The full decomposition of C_lhs * C_rhs; `automatic` enumerates when the
/// smaller class is below the configured threshold.
ClassProduct eta(const CycleType& lhs, const CycleType& rhs, Engine engine = Engine::automatic,
                 const Limits& limits = {});

/// Products for every unordered pair of non-identity types of S_n, in the
/// order (i, j), i <= j, over partitions_of(n).
std::vector<ClassProduct> eta_table(int n, Engine engine = Engine::character,
                                    const Limits& limits = {});

struct MinEta {
  int minimum = 0;
  std::vector<TypePair> achievers;
};

/// Least eta over all pairs of non-identity types, with every pair that
/// attains it.
MinEta min_eta(int n, Engine engine = Engine::character, const Limits& limits = {});
MinEta min_eta(const std::vector<ClassProduct>& table);

/// Number of even classes, i.e. classes of S_n inside A_n.
int even_class_count(int n, const Limits& limits = {});

nlohmann::json to_json(const ClassProduct& product);
ClassProduct class_product_from_json(const nlohmann::json& j);

}  // namespace classprod
