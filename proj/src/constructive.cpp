#include "classprod/constructive.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "classprod/errors.hpp"

namespace classprod {

namespace {

using Arrows = std::vector<std::pair<int, int>>;

bool is_type_pair(const Permutation& a, const Permutation& b, const CycleType& x,
                  const CycleType& y) {
  const CycleType ta = cycle_type(a);
  const CycleType tb = cycle_type(b);
  return (ta == x && tb == y) || (ta == y && tb == x);
}

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.n() != b.n()) {
    throw DomainError(std::string(op) + ": alpha and beta have different degrees");
  }
}

/// Swaps k and t in the running conjugate and its conjugator:
/// a -> (k t) a (k t), sigma -> sigma (k t).
void apply_swap(std::vector<int>& a, std::vector<int>& sigma, int k, int t) {
  auto swap_point = [k, t](int x) { return x == k ? t : x == t ? k : x; };
  std::vector<int> next(a.size());
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
    next[static_cast<std::size_t>(swap_point(i) - 1)] =
        swap_point(a[static_cast<std::size_t>(i - 1)]);
  }
  a = std::move(next);
  std::swap(sigma[static_cast<std::size_t>(k - 1)], sigma[static_cast<std::size_t>(t - 1)]);
}

/// Greedy repair: starting from a = alpha^sigma, walk k = first..n and make
/// a(k) != beta(k) by conjugating with (k t). Positions below `first` are
/// left as they are. Points in `forbidden` are never used as t, so a
/// transposition never touches them. Returns nullopt if some step has no
/// admissible t.
std::optional<Permutation> greedy_avoid(const Permutation& alpha, const Permutation& beta,
                                        int first, const std::vector<int>& forbidden) {
  const int n = alpha.n();
  std::vector<int> a(alpha.images().begin(), alpha.images().end());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  const Permutation beta_inv = inverse(beta);
  auto at = [&a](int x) { return a[static_cast<std::size_t>(x - 1)]; };
  auto is_forbidden = [&forbidden](int x) {
    return std::find(forbidden.begin(), forbidden.end(), x) != forbidden.end();
  };

  for (int k = first; k <= n; ++k) {
    if (at(k) != beta(k)) continue;
    int t = 0;
    if (at(k) == k) {
      // Both fix k: any point moved by both will do.
      for (int c = 1; c <= n && !t; ++c) {
        if (!is_forbidden(c) && at(c) != c && beta(c) != c) t = c;
      }
    } else {
      int a_inv_k = 0;
      for (int x = 1; x <= n; ++x) {
        if (at(x) == k) a_inv_k = x;
      }
      const int blocked[4] = {at(beta_inv(k)), beta(a_inv_k), at(k), k};
      for (int c = 1; c <= n && !t; ++c) {
        if (!is_forbidden(c) && std::find(std::begin(blocked), std::end(blocked), c) == std::end(blocked)) {
          t = c;
        }
      }
    }
    if (!t) return std::nullopt;
    apply_swap(a, sigma, k, t);
  }
  return Permutation(std::move(sigma));
}

/// First sigma in lexicographic order of images satisfying `accept`.
std::optional<Permutation> search_all(int n, const std::function<bool(const Permutation&)>& accept) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation sigma(images);
    if (accept(sigma)) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

bool avoids(const Permutation& a, const Permutation& b) {
  for (int i = 1; i <= a.n(); ++i) {
    if (a(i) == b(i)) return false;
  }
  return true;
}

bool has_long_cycle(const Permutation& p) { return cycle_type(p).largest_part() >= 3; }
bool has_transposition(const Permutation& p) { return cycle_type(p).multiplicity(2) > 0; }
int moved_points(const Permutation& p) { return p.n() - p.fixed_point_count(); }

/// Conjugates alpha and beta into prescribed positions. Returns the sigma
/// for which alpha^sigma * beta is conjugate to alpha0 * beta0 (through the
/// conjugator mapping beta onto beta0), given an extra conjugator `inner`
/// applied to alpha0.
Permutation transport(const Permutation& alpha, const Permutation& alpha0, const Permutation& beta,
                      const Permutation& beta0, const Permutation& inner) {
  // alpha^{g inner} beta^h = (alpha^{g inner h^-1} beta)^h
  const Permutation g = conjugator_between(alpha, alpha0);
  const Permutation h = conjugator_between(beta, beta0);
  return compose(compose(g, inner), inverse(h));
}

Permutation prescribed(const Permutation& p, const Arrows& arrows, const char* what) {
  auto out = extend_partial(cycle_type(p), arrows);
  if (!out) throw InvariantViolation(std::string("cannot place ") + what + " in position");
  return *out;
}

}  // namespace

ConjugatorWitness make_witness(const Permutation& alpha, const Permutation& beta,
                               const Permutation& sigma) {
  Permutation product = compose(conjugate(alpha, sigma), beta);
  auto fixed = product.fixed_points();
  return ConjugatorWitness{sigma, std::move(product), std::move(fixed)};
}

Permutation avoid_conjugator(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta, "avoid_conjugator");
  const int n = alpha.n();
  if (n < 4) throw DomainError("avoid_conjugator: needs n >= 4");
  if (alpha.fixed_point_count() + beta.fixed_point_count() > n) {
    throw DomainError("avoid_conjugator: alpha and beta fix more than n points between them");
  }
  if (n == 4 && is_type_pair(alpha, beta, CycleType{3, 1}, CycleType{2, 2})) {
    throw ImpossibleCaseError(
        "in S_4 every conjugate of a 3-cycle agrees with a double transposition somewhere",
        "Lemma 5 remark (n = 4)");
  }
  std::optional<Permutation> sigma = greedy_avoid(alpha, beta, 1, {});
  if (!sigma && n == 4) {
    sigma = search_all(n, [&](const Permutation& s) { return avoids(conjugate(alpha, s), beta); });
  }
  if (!sigma || !avoids(conjugate(alpha, *sigma), beta)) {
    throw InvariantViolation("avoid_conjugator: construction failed for " + alpha.to_string() +
                             ", " + beta.to_string());
  }
  return *sigma;
}

ConjugatorWitness derangement_product(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta, "derangement_product");
  if (alpha.n() < 4) throw DomainError("derangement_product: needs n >= 4");
  if (alpha.fixed_point_count() != 0) {
    throw DomainError("derangement_product: alpha must be fixed-point-free");
  }
  // alpha^sigma beta (i) = i  iff  (alpha^-1)^sigma (i) = beta(i)
  auto w = make_witness(alpha, beta, avoid_conjugator(inverse(alpha), beta));
  if (!w.fixed_points.empty()) throw InvariantViolation("derangement_product: product fixes a point");
  return w;
}

ConjugatorWitness shrink_fixed_points(const Permutation& alpha, const Permutation& beta, int m,
                                      int n) {
  require_same_degree(alpha, beta, "shrink_fixed_points");
  if (m < 4) throw DomainError("shrink_fixed_points: needs m >= 4");
  if (n <= m) throw DomainError("shrink_fixed_points: needs n > m");
  if (alpha.n() < m || alpha.n() > n) {
    throw DomainError("shrink_fixed_points: permutations must live in S_m or S_n");
  }
  const Permutation a = restrict_to(alpha, m);
  const Permutation b = restrict_to(beta, m);
  if (a.fixed_point_count() != 0) {
    throw DomainError("shrink_fixed_points: alpha must be fixed-point-free on {1..m}");
  }
  if (b.is_identity()) throw DomainError("shrink_fixed_points: beta must be nontrivial");

  const Permutation alpha_n = embed(a, n);
  const Permutation beta_n = embed(b, n);
  const int expected = n - m - 1;

  Permutation sigma_m;
  try {
    sigma_m = derangement_product(a, b).sigma;
  } catch (const ImpossibleCaseError&) {
    // No derangement product inside S_m; look for one on {1..m+1} directly.
    const Permutation a1 = embed(a, m + 1);
    const Permutation b1 = embed(b, m + 1);
    auto found = search_all(m + 1, [&](const Permutation& s) {
      return compose(conjugate(a1, s), b1).fixed_point_count() == 0;
    });
    if (!found) throw InvariantViolation("shrink_fixed_points: no derangement on m + 1 points");
    auto w = make_witness(alpha_n, beta_n, embed(*found, n));
    if (static_cast<int>(w.fixed_points.size()) != expected) {
      throw InvariantViolation("shrink_fixed_points: wrong fixed-point count");
    }
    return w;
  }

  // Make beta move m by relabelling both factors with (m j).
  Permutation h = Permutation::identity(m);
  if (b(m) == m) {
    int j = 1;
    while (b(j) == j) ++j;
    h = transposition(m, m, j);
  }
  const Permutation h_n = embed(h, n);
  const Permutation swap_n = transposition(n, m, m + 1);
  const Permutation sigma =
      compose(compose(compose(embed(sigma_m, n), h_n), swap_n), inverse(h_n));
  auto w = make_witness(alpha_n, beta_n, sigma);
  if (static_cast<int>(w.fixed_points.size()) != expected ||
      (!w.fixed_points.empty() && w.fixed_points.front() <= m + 1)) {
    throw InvariantViolation("shrink_fixed_points: construction failed");
  }
  return w;
}

ConjugatorWitness at_least_one_fixed_point(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta, "at_least_one_fixed_point");
  if (alpha.is_identity() || beta.is_identity()) {
    throw DomainError("at_least_one_fixed_point: alpha and beta must be nontrivial");
  }
  // Pick p moved by beta, q = beta(p), and an arrow x -> y of alpha. A
  // sigma with sigma(q) = x and sigma(p) = y gives alpha^sigma(q) = p, so the
  // product fixes p.
  const int n = alpha.n();
  int p = 1;
  while (beta(p) == p) ++p;
  const int q = beta(p);
  int x = 1;
  while (alpha(x) == x) ++x;
  const int y = alpha(x);

  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
  images[static_cast<std::size_t>(q - 1)] = x;
  images[static_cast<std::size_t>(p - 1)] = y;
  taken[static_cast<std::size_t>(x)] = taken[static_cast<std::size_t>(y)] = 1;
  int value = 1;
  for (auto& image : images) {
    if (image) continue;
    while (taken[static_cast<std::size_t>(value)]) ++value;
    image = value;
    taken[static_cast<std::size_t>(value)] = 1;
  }
  auto w = make_witness(alpha, beta, Permutation(std::move(images)));
  if (w.product(p) != p) throw InvariantViolation("at_least_one_fixed_point: construction failed");
  return w;
}

ConjugatorWitness one_fixed_point_product(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta, "one_fixed_point_product");
  const int n = alpha.n();
  if (n < 6) throw DomainError("one_fixed_point_product: needs n >= 6");
  if (alpha.is_identity() || beta.is_identity()) {
    throw DomainError("one_fixed_point_product: alpha and beta must be nontrivial");
  }
  const bool long_a = has_long_cycle(alpha);
  const bool long_b = has_long_cycle(beta);
  if (!long_a && !long_b) {
    throw DomainError("one_fixed_point_product: neither permutation has a cycle of length >= 3");
  }
  if (alpha.fixed_point_count() != 0 && beta.fixed_point_count() != 0) {
    throw DomainError("one_fixed_point_product: neither permutation is fixed-point-free");
  }
  if (n == 6 && is_type_pair(alpha, beta, CycleType{3, 3}, CycleType{2, 2, 2})) {
    throw ImpossibleCaseError(
        "in S_6 no product of (1 2 3)(4 5 6) and (1 2)(3 4)(5 6) conjugates has exactly one "
        "fixed point",
        "Remark 14 (n = 6)");
  }

  // Position the pair so that the product fixes 1 and moves 2.
  Arrows on_alpha;
  Arrows on_beta;
  if (long_a && long_b) {
    on_alpha = {{3, 2}, {2, 1}};
    on_beta = {{1, 2}, {2, 4}};
  } else if (long_a) {
    on_alpha = {{2, 1}, {1, 3}};
    on_beta = {{1, 2}, {2, 1}};
  } else {
    on_alpha = {{2, 1}, {1, 2}};
    on_beta = {{1, 2}, {3, 1}};
  }
  const Permutation alpha0 = prescribed(alpha, on_alpha, "alpha");
  const Permutation beta0 = prescribed(beta, on_beta, "beta");

  // Then clear every other fixed point of the product without touching 1, 2.
  std::optional<Permutation> inner = greedy_avoid(inverse(alpha0), beta0, 3, {1, 2});
  std::optional<Permutation> sigma;
  if (inner) sigma = transport(alpha, alpha0, beta, beta0, *inner);
  if (!sigma && n == 6) {
    sigma = search_all(n, [&](const Permutation& s) {
      return compose(conjugate(alpha, s), beta).fixed_point_count() == 1;
    });
  }
  if (!sigma) {
    throw InvariantViolation("one_fixed_point_product: construction failed for " +
                             alpha.to_string() + ", " + beta.to_string());
  }
  auto w = make_witness(alpha, beta, *sigma);
  if (w.fixed_points.size() != 1) {
    throw InvariantViolation("one_fixed_point_product: product has " +
                             std::to_string(w.fixed_points.size()) + " fixed points");
  }
  return w;
}

ConjugatorWitness two_fixed_point_product(const Permutation& alpha, const Permutation& beta) {
  require_same_degree(alpha, beta, "two_fixed_point_product");
  if (alpha.n() < 4) throw DomainError("two_fixed_point_product: needs n >= 4");
  if (alpha.is_identity() || beta.is_identity()) {
    throw DomainError("two_fixed_point_product: alpha and beta must be nontrivial");
  }
  if (alpha.fixed_point_count() != 0 && beta.fixed_point_count() != 0) {
    throw DomainError("two_fixed_point_product: neither permutation is fixed-point-free");
  }

  Arrows on_alpha;
  Arrows on_beta;
  if (has_long_cycle(alpha) && has_long_cycle(beta)) {
    // product fixes 1 and 3
    on_beta = {{3, 1}, {1, 2}};
    on_alpha = {{2, 1}, {1, 3}};
  } else if (moved_points(alpha) >= 4 && moved_points(beta) >= 4) {
    // product fixes 1 and 3
    on_beta = {{1, 2}, {3, 4}};
    on_alpha = {{2, 1}, {4, 3}};
  } else if (has_transposition(alpha) && has_transposition(beta)) {
    // product fixes 1 and 2
    on_beta = {{1, 2}, {2, 1}};
    on_alpha = {{2, 1}, {1, 2}};
  } else {
    throw DomainError(
        "two_fixed_point_product: no case applies: (i) both need a cycle of length >= 3, "
        "(ii) each must move at least 4 points, (iii) both need a transposition");
  }
  const Permutation alpha0 = prescribed(alpha, on_alpha, "alpha");
  const Permutation beta0 = prescribed(beta, on_beta, "beta");
  auto w = make_witness(alpha, beta,
                        transport(alpha, alpha0, beta, beta0, Permutation::identity(alpha.n())));
  if (w.fixed_points.size() < 2) {
    throw InvariantViolation("two_fixed_point_product: product fixes fewer than two points");
  }
  return w;
}

}  // namespace classprod
