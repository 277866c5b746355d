#include <string>

#include "classprod/errors.hpp"
#include "classprod/permutation.hpp"

namespace classprod {

// Each element is written as a word: cycles laid end to end, every cycle
// opened by the smallest point not yet used. The opening point is forced,
// so the only choices are the cycle length at an opening position and the
// point at every other position. Enumerating those choices odometer-style
// visits each permutation of the type exactly once.

ClassStream::ClassStream(const CycleType& t, const Limits& limits)
    : n_(t.n()), max_part_(t.largest_part()) {
  const BigInt size = class_size(t);
  if (size > limits.max_enumeration) {
    throw ResourceError("class " + t.to_string() + " has " + size.str() +
                        " elements, above the enumeration bound " +
                        std::to_string(limits.max_enumeration) + "; use the character engine");
  }
  const auto n = static_cast<std::size_t>(n_);
  word_.assign(n, 0);
  cycle_len_.assign(n, 0);
  offset_.assign(n, 0);
  used_.assign(n + 1, 0);
  remaining_.assign(static_cast<std::size_t>(max_part_) + 1, 0);
  for (int part : t.parts()) ++remaining_[static_cast<std::size_t>(part)];
  images_.assign(n, 0);
}

bool ClassStream::starts_cycle(std::size_t pos) const {
  return pos == 0 || offset_[pos - 1] + 1 == cycle_len_[pos - 1];
}

void ClassStream::release(std::size_t pos) {
  used_[static_cast<std::size_t>(word_[pos])] = 0;
  if (offset_[pos] == 0) ++remaining_[static_cast<std::size_t>(cycle_len_[pos])];
}

bool ClassStream::place_first(std::size_t pos) {
  if (starts_cycle(pos)) {
    int point = 1;
    while (used_[static_cast<std::size_t>(point)]) ++point;
    int len = max_part_;
    while (len > 0 && remaining_[static_cast<std::size_t>(len)] == 0) --len;
    if (len == 0) return false;
    --remaining_[static_cast<std::size_t>(len)];
    used_[static_cast<std::size_t>(point)] = 1;
    word_[pos] = point;
    cycle_len_[pos] = len;
    offset_[pos] = 0;
    return true;
  }
  int point = 1;
  while (point <= n_ && used_[static_cast<std::size_t>(point)]) ++point;
  if (point > n_) return false;
  used_[static_cast<std::size_t>(point)] = 1;
  word_[pos] = point;
  cycle_len_[pos] = cycle_len_[pos - 1];
  offset_[pos] = offset_[pos - 1] + 1;
  return true;
}

bool ClassStream::place_next(std::size_t pos) {
  release(pos);
  if (offset_[pos] == 0) {
    int len = cycle_len_[pos] - 1;
    while (len > 0 && remaining_[static_cast<std::size_t>(len)] == 0) --len;
    if (len == 0) return false;
    --remaining_[static_cast<std::size_t>(len)];
    used_[static_cast<std::size_t>(word_[pos])] = 1;
    cycle_len_[pos] = len;
    return true;
  }
  int point = word_[pos] + 1;
  while (point <= n_ && used_[static_cast<std::size_t>(point)]) ++point;
  if (point > n_) return false;
  used_[static_cast<std::size_t>(point)] = 1;
  word_[pos] = point;
  return true;
}

void ClassStream::build_images() {
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t pos = 0; pos < n;) {
    const auto len = static_cast<std::size_t>(cycle_len_[pos]);
    for (std::size_t k = 0; k < len; ++k) {
      images_[static_cast<std::size_t>(word_[pos + k] - 1)] = word_[pos + (k + 1) % len];
    }
    pos += len;
  }
}

bool ClassStream::advance() {
  if (done_) return false;
  const auto n = static_cast<std::size_t>(n_);
  if (!started_) {
    started_ = true;
    for (std::size_t pos = 0; pos < n; ++pos) place_first(pos);
    build_images();
    return true;
  }
  for (std::size_t pos = n; pos-- > 0;) {
    if (place_next(pos)) {
      for (std::size_t q = pos + 1; q < n; ++q) {
        if (!place_first(q)) throw InvariantViolation("class stream: inconsistent state");
      }
      build_images();
      return true;
    }
  }
  done_ = true;
  return false;
}

std::optional<Permutation> ClassStream::next() {
  if (!advance()) return std::nullopt;
  return Permutation(images_);
}

}  // namespace classprod
