#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "classprod/class_algebra.hpp"
#include "classprod/errors.hpp"

namespace classprod {

namespace {

/// Murnaghan-Nakayama on beta-sets: removing a border strip of length k
/// from a shape moves one bead of its beta-set from b to b - k (onto an
/// empty position); the strip height is the number of beads strictly
/// between the two positions.
class MnEvaluator {
 public:
  std::int64_t operator()(const std::vector<int>& shape, std::span<const int> cls) {
    if (cls.empty()) return shape.empty() ? 1 : 0;
    std::string key = encode(shape, cls);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cls.front();
    const int len = static_cast<int>(shape.size());
    std::vector<int> beads(shape.size());
    for (int j = 0; j < len; ++j) beads[static_cast<std::size_t>(j)] = shape[static_cast<std::size_t>(j)] + len - 1 - j;

    std::int64_t total = 0;
    for (int j = 0; j < len; ++j) {
      const int from = beads[static_cast<std::size_t>(j)];
      const int to = from - k;
      if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
      int between = 0;
      for (int b : beads) between += b > to && b < from;
      std::vector<int> moved = beads;
      moved[static_cast<std::size_t>(j)] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (int i = 0; i < len; ++i) {
        const int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) smaller.push_back(part);
      }
      const std::int64_t sub = (*this)(smaller, cls.subspan(1));
      total += between % 2 == 0 ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  static std::string encode(const std::vector<int>& shape, std::span<const int> cls) {
    std::string key;
    key.reserve(shape.size() + cls.size() + 1);
    for (int p : shape) key.push_back(static_cast<char>(p));
    key.push_back('|');
    for (int p : cls) key.push_back(static_cast<char>(p));
    return key;
  }

  std::unordered_map<std::string, std::int64_t> memo_;
};

void require_same_n(const CycleType& a, const CycleType& b, const char* op) {
  if (a.n() != b.n()) {
    throw DomainError(std::string(op) + ": partitions of different n (" + a.to_string() + " vs " +
                      b.to_string() + ")");
  }
}

}  // namespace

std::int64_t mn_character(const CycleType& irrep, const CycleType& cls) {
  require_same_n(irrep, cls, "mn_character");
  static std::mutex mutex;
  static MnEvaluator evaluator;
  std::lock_guard lock(mutex);
  return evaluator(std::vector<int>(irrep.parts().begin(), irrep.parts().end()), cls.parts());
}

CharacterTable::CharacterTable(int n, const Limits& limits)
    : n_(n), partitions_(partitions_of(n, limits)), order_(factorial(n)) {
  if (n > limits.max_table_n) {
    throw ResourceError("character table for n = " + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(limits.max_table_n));
  }
  const std::size_t p = partitions_.size();
  values_.resize(p * p);
  MnEvaluator evaluator;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<int> shape(partitions_[i].parts().begin(), partitions_[i].parts().end());
    for (std::size_t j = 0; j < p; ++j) values_[i * p + j] = evaluator(shape, partitions_[j].parts());
  }
  const int identity = static_cast<int>(p) - 1;
  for (std::size_t i = 0; i < p; ++i) {
    dims_.emplace_back(value(static_cast<int>(i), identity));
    index_ratio_.push_back(order_ / dims_.back());
  }
  for (const auto& t : partitions_) class_sizes_.push_back(classprod::class_size(t));
}

int CharacterTable::index_of(const CycleType& t) const {
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), t, std::greater<>());
  if (it == partitions_.end() || *it != t) {
    throw DomainError("partition " + t.to_string() + " is not a partition of " + std::to_string(n_));
  }
  return static_cast<int>(it - partitions_.begin());
}

BigInt CharacterTable::weighted_triple_sum(int x, int y, int z) const {
  BigInt sum = 0;
  for (int chi = 0; chi < size(); ++chi) {
    const std::int64_t prod2 = value(chi, x) * value(chi, y);
    if (prod2 == 0) continue;
    const std::int64_t vz = value(chi, z);
    if (vz == 0) continue;
    sum += BigInt(prod2) * vz * index_ratio_[static_cast<std::size_t>(chi)];
  }
  return sum;
}

std::shared_ptr<const CharacterTable> character_table(int n, const Limits& limits) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
      if (n > limits.max_table_n) {
        throw ResourceError("character table for n = " + std::to_string(n) +
                            " exceeds the configured bound " + std::to_string(limits.max_table_n));
      }
      return it->second;
    }
  }
  auto table = std::make_shared<const CharacterTable>(n, limits);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

BigInt structure_constant(const CycleType& lhs, const CycleType& rhs, const CycleType& out,
                          const Limits& limits) {
  require_same_n(lhs, rhs, "structure_constant");
  require_same_n(lhs, out, "structure_constant");
  const auto table = character_table(lhs.n(), limits);
  const int x = table->index_of(lhs);
  const int y = table->index_of(rhs);
  const int z = table->index_of(out);
  const BigInt numerator = table->class_size(x) * table->class_size(y) * table->weighted_triple_sum(x, y, z);
  const BigInt denominator = table->group_order() * table->group_order();
  if (numerator % denominator != 0 || numerator < 0) {
    throw InvariantViolation("structure constant for (" + lhs.to_string() + ", " + rhs.to_string() +
                             ", " + out.to_string() + ") is not a non-negative integer");
  }
  return numerator / denominator;
}

}  // namespace classprod
