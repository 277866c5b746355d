#include "classprod/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "classprod/errors.hpp"

namespace classprod {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("CLASSPROD_MAX_N"); env && *env) {
    int value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
      throw DomainError("CLASSPROD_MAX_N must be a positive integer, got '" +
                        std::string(text) + "'");
    }
    limits.max_n = value;
    limits.max_table_n = value;
  }
  return limits;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a cycle type needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw DomainError("cycle type parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

CycleType CycleType::identity(int n) {
  if (n < 1) throw DomainError("degree must be positive");
  return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1));
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty part in partition '" + std::string(text) + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not an integer: '" + std::string(token) + "'");
    }
    if (value < 1) throw ParseError("partition parts must be positive, got " + std::to_string(value));
    parts.push_back(value);
    start = comma + 1;
  }
  return CycleType(std::move(parts));
}

int CycleType::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int CycleType::moved_points() const noexcept { return n_ - multiplicity(1); }

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<CycleType> partitions_of(int n, const Limits& limits) {
  if (n < 1) throw DomainError("partitions_of: n must be positive");
  if (n > limits.max_n) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the configured bound " +
                        std::to_string(limits.max_n) + " (set CLASSPROD_MAX_N to raise it)");
  }
  // Standard successor rule for partitions in reverse-lexicographic order.
  std::vector<CycleType> out;
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int part = --a.back();
    int rest = ones + 1;
    while (rest > part) {
      a.push_back(part);
      rest -= part;
    }
    if (rest > 0) a.push_back(rest);
  }
  return out;
}

BigInt centralizer_order(const CycleType& t) {
  BigInt z = 1;
  auto parts = t.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int m = static_cast<int>(j - i);
    BigInt power = 1;
    for (int k = 0; k < m; ++k) power *= parts[i];
    z *= power * factorial(m);
    i = j;
  }
  return z;
}

BigInt class_size(const CycleType& t) { return factorial(t.n()) / centralizer_order(t); }

int fixed_point_count(const CycleType& t) noexcept { return t.multiplicity(1); }

CycleType type_union(const CycleType& t1, const CycleType& t2) {
  std::vector<int> parts(t1.parts().begin(), t1.parts().end());
  parts.insert(parts.end(), t2.parts().begin(), t2.parts().end());
  return CycleType(std::move(parts));
}

TypePair make_type_pair(CycleType a, CycleType b) {
  if (a < b) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

namespace {

CycleType repeated(int part, int count, int n) {
  std::vector<int> parts(static_cast<std::size_t>(count), part);
  parts.resize(parts.size() + static_cast<std::size_t>(n - part * count), 1);
  return CycleType(std::move(parts));
}

}  // namespace

std::vector<TypePair> two_class_product_pairs(int n) {
  if (n <= 5) throw DomainError("the two-class classification needs n > 5");
  std::vector<TypePair> out;
  const CycleType transposition = repeated(2, 1, n);
  const CycleType three_cycle = repeated(3, 1, n);
  if (n % 2 == 0) {
    const CycleType involution = repeated(2, n / 2, n);
    out.push_back(make_type_pair(involution, transposition));
    out.push_back(make_type_pair(involution, three_cycle));
  }
  if (n % 3 == 0) out.push_back(make_type_pair(repeated(3, n / 3, n), transposition));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace classprod
