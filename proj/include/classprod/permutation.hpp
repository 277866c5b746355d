#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classprod/limits.hpp"
#include "classprod/partitions.hpp"

namespace classprod {

/// A bijection of {1..n}. Points are 1-based everywhere in the public API.
class Permutation {
 public:
  Permutation() = default;
  /// images[i - 1] is the image of point i.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds a permutation of {1..n} from disjoint cycles; unlisted points
  /// are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Parses cycle notation such as "(1 2 3)(4 5)". "", "()" and "e" give the
  /// identity.
  static Permutation parse(std::string_view text, int n);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::vector<int> fixed_points() const;
  int fixed_point_count() const noexcept;

  /// Cycle notation without fixed points; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(i) = a(b(i)): the right factor acts first.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation inverse(const Permutation& a);

/// a^g = g^{-1} a g.
Permutation conjugate(const Permutation& a, const Permutation& g);

/// Disjoint cycles covering {1..n}, fixed points included. Each cycle starts
/// at its smallest point; cycles are sorted by decreasing length, then by
/// smallest point.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& a);

CycleType cycle_type(const Permutation& a);

/// Cycle type without building the decomposition. `scratch` is reused
/// across calls to avoid allocation in enumeration loops.
CycleType cycle_type(std::span<const int> images, std::vector<char>& scratch);

/// Consecutive blocks in part order: [3,2] -> (1 2 3)(4 5).
Permutation canonical_rep(const CycleType& t);

/// Some g with conjugate(a, g) == b. Throws DomainError if the cycle types
/// differ.
Permutation conjugator_between(const Permutation& a, const Permutation& b);

/// Extends a to {1..n}, fixing the new points.
Permutation embed(const Permutation& a, int n);

/// Restricts a to {1..m}; a must fix every point above m.
Permutation restrict_to(const Permutation& a, int m);

/// The transposition (i j) in S_n.
Permutation transposition(int n, int i, int j);

/// Some permutation of type t that agrees with every arrow x -> y in
/// `arrows`, or nullopt if no such permutation exists.
std::optional<Permutation> extend_partial(const CycleType& t,
                                          std::span<const std::pair<int, int>> arrows);

/// Lazily enumerates every permutation of one cycle type exactly once.
/// Single consumer; independent streams may run concurrently.
class ClassStream {
 public:
  explicit ClassStream(const CycleType& t, const Limits& limits = {});

  /// The next element, or nullopt once the class is exhausted.
  std::optional<Permutation> next();

  /// Advances without materialising a Permutation; on success `images` views
  /// the current element until the following call.
  bool advance();
  std::span<const int> current_images() const noexcept { return images_; }

 private:
  bool place_first(std::size_t pos);
  bool place_next(std::size_t pos);
  void release(std::size_t pos);
  bool starts_cycle(std::size_t pos) const;
  void build_images();

  int n_;
  int max_part_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> word_;
  std::vector<int> cycle_len_;  // length of the cycle covering each position
  std::vector<int> offset_;     // index of each position inside its cycle
  std::vector<char> used_;      // indexed by point
  std::vector<int> remaining_;  // unplaced cycles, indexed by length
  std::vector<int> images_;
};

/// Convenience wrapper for ClassStream; the class size is checked against
/// the enumeration bound before anything is produced.
inline ClassStream enumerate_class(const CycleType& t, const Limits& limits = {}) {
  return ClassStream(t, limits);
}

}  // namespace classprod
