#pragma once

#include <cstdint>

namespace classprod {

struct Limits {
  /// Largest n accepted by partition enumeration.
  int max_n = 30;
  /// Largest n for which a full character table is built.
  int max_table_n = 25;
  /// Largest class that may be enumerated element by element.
  std::uint64_t max_enumeration = 10'000'000;
  /// The auto engine enumerates when the smaller class is at most this big.
  std::uint64_t auto_bruteforce_threshold = 1'000'000;

  /// Defaults, with CLASSPROD_MAX_N applied when set.
  static Limits from_environment();
};

}  // namespace classprod
