#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classprod/class_algebra.hpp"
#include "classprod/limits.hpp"

namespace classprod {

/// The checkable claims. String identifiers (to_string) are the ones used
/// in reports and on the command line.
enum class Statement {
  two_class_pairs,       // "theorem_a"
  minimum_eta,           // "corollary_b"
  transposition_square,  // "lemma_9"
  s4_single_class,       // "lemma_10"
  s5_two_class,          // "remark_n5"
  s6_one_fixed_point,    // "remark_14"
  never_single_class,    // "arad_herzog"
  max_eta,               // "max_eta"
  padding_monotonicity,  // "lemma_4_7_monotonicity"
  small_n,               // "small_n": the three small-degree checks together
  constructions,         // "constructions"
};

std::string to_string(Statement s);
Statement parse_statement(const std::string& text);
const std::vector<Statement>& all_statements();

struct Witness {
  int n = 0;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::string observed;
  std::string expected;
  bool ok = true;
  std::string note;
};

struct VerificationReport {
  Statement statement{};
  int n_from = 0;
  int n_to = 0;
  std::vector<Witness> witnesses;
  std::optional<std::uint64_t> seed;
  std::chrono::milliseconds elapsed{0};

  /// Pass iff no witness records a mismatch.
  bool passed() const;
};

/// eta >= 2 for every pair of non-identity classes of S_n.
VerificationReport verify_arad_herzog(int n, const Limits& limits = {});
/// The pairs with eta = 2 are exactly two_class_product_pairs(n). n > 5.
VerificationReport verify_theorem_a(int n, const Limits& limits = {});
/// min eta is 2 when 2 or 3 divides n and 3 otherwise. n > 5.
VerificationReport verify_corollary_b(int n, const Limits& limits = {});
/// The square of the transposition class is identity + 3-cycles + double
/// transpositions. n >= 4.
VerificationReport verify_transposition_square(int n, const Limits& limits = {});

VerificationReport verify_s4_single_class(const Limits& limits = {});
VerificationReport verify_s5_two_class(const Limits& limits = {});
VerificationReport verify_s6_one_fixed_point(const Limits& limits = {});
/// The three checks above merged into one report.
VerificationReport verify_small_n(const Limits& limits = {});

/// max_C eta(C, C) equals the number of even classes and no pair exceeds
/// it. n >= 5.
VerificationReport verify_max_eta(int n, const Limits& limits = {});

/// Padding both types with k = 1, 2 fixed points never lowers eta, and
/// strictly raises it when lhs is fixed-point-free, rhs nontrivial, n >= 4.
VerificationReport verify_padding_monotonicity(int n, const Limits& limits = {});

/// Random pairs meeting each construction's hypotheses, `trials` per
/// construction; documented impossible pairs at n = 4 and n = 6 are checked
/// for their designated error.
VerificationReport verify_constructions(int n, int trials, std::uint64_t seed);

/// Runs one statement at degree n (n is ignored by small_n and the
/// individual small-degree checks).
VerificationReport verify(Statement s, int n, std::uint64_t seed, int trials = 200,
                          const Limits& limits = {});
/// Whether `s` has a meaning at degree n.
bool applies(Statement s, int n);

nlohmann::json to_json(const VerificationReport& report, bool with_timing = true);

}  // namespace classprod
