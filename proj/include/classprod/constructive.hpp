#pragma once

#include <vector>

#include "classprod/permutation.hpp"

namespace classprod {

/// A conjugator sigma together with the product alpha^sigma * beta.
struct ConjugatorWitness {
  Permutation sigma;
  Permutation product;
  std::vector<int> fixed_points;
};

/// Builds and self-checks the witness for a given sigma.
ConjugatorWitness make_witness(const Permutation& alpha, const Permutation& beta,
                               const Permutation& sigma);

/// sigma with alpha^sigma(i) != beta(i) for every point i.
///
/// Requires n >= 4 and fix(alpha) + fix(beta) <= n. Walks the points in
/// order and repairs each collision with a transposition (k t), taking the
/// smallest admissible t. For n = 4 the repair can get stuck; the search
/// then falls back to all of S_4, and the pair of types {[3,1],[2,2]}, which
/// has no solution, raises ImpossibleCaseError.
Permutation avoid_conjugator(const Permutation& alpha, const Permutation& beta);

/// Witness whose product has no fixed points. alpha must be fixed-point-free.
ConjugatorWitness derangement_product(const Permutation& alpha, const Permutation& beta);

/// alpha, beta act on {1..m} (points above m fixed), alpha fixed-point-free
/// there, beta nontrivial, m >= 4 and n > m. Returns a witness in S_n whose
/// product has exactly n - m - 1 fixed points, i.e. fewer than any product
/// of the two classes inside S_m.
ConjugatorWitness shrink_fixed_points(const Permutation& alpha, const Permutation& beta, int m,
                                      int n);

/// Witness whose product fixes at least one point; alpha, beta nontrivial.
ConjugatorWitness at_least_one_fixed_point(const Permutation& alpha, const Permutation& beta);

/// Witness whose product has exactly one fixed point.
///
/// Requires n >= 6, both nontrivial, one of them with a cycle of length at
/// least 3 and one of them fixed-point-free. For n = 6 the greedy repair may
/// fail and S_6 is searched instead; {[3,3],[2,2,2]} raises
/// ImpossibleCaseError.
ConjugatorWitness one_fixed_point_product(const Permutation& alpha, const Permutation& beta);

/// Witness whose product fixes at least two points.
///
/// Requires both nontrivial, one fixed-point-free, and one of: (i) both have
/// a cycle of length >= 3, (ii) each moves at least 4 points, (iii) both
/// contain a transposition.
ConjugatorWitness two_fixed_point_product(const Permutation& alpha, const Permutation& beta);

}  // namespace classprod
