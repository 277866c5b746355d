#include <gtest/gtest.h>

#include "classprod/class_algebra.hpp"
#include "classprod/errors.hpp"
#include "classprod/permutation.hpp"
#include "oracles.hpp"

namespace classprod {
namespace {

std::vector<int> as_vector(const CycleType& t) { return {t.parts().begin(), t.parts().end()}; }

std::vector<int> images_of(const CycleType& t) {
  const Permutation p = canonical_rep(t);
  return {p.images().begin(), p.images().end()};
}

CycleType with_ones(std::vector<int> parts, int n) {
  int used = 0;
  for (int p : parts) used += p;
  parts.resize(parts.size() + static_cast<std::size_t>(n - used), 1);
  return CycleType(parts);
}

std::set<CycleType> types_of(const ClassProduct& p) {
  std::set<CycleType> out;
  for (const auto& [t, m] : p.components) out.insert(t);
  return out;
}

CycleType transposition_type(int n) {
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return CycleType(parts);
}

TEST(Bruteforce, Examples) {
  for (int n = 4; n <= 7; ++n) {
    const CycleType t = transposition_type(n);
    const auto p = product_types_bruteforce(t, t);
    EXPECT_EQ(p.eta(), 3);
    EXPECT_EQ(types_of(p), (std::set<CycleType>{CycleType::identity(n),
                                                with_ones({3}, n), with_ones({2, 2}, n)}));
  }
  const auto id = product_types_bruteforce(CycleType{3, 2}, CycleType::identity(5));
  EXPECT_EQ(id.eta(), 1);
  EXPECT_EQ(id.components.at(CycleType{3, 2}), 1);

  const auto s3 = product_types_bruteforce(CycleType{2, 1}, CycleType{2, 1});
  EXPECT_EQ(s3.components.at(CycleType{3}), 3);
  EXPECT_EQ(s3.components.at(CycleType{1, 1, 1}), 3);
}

TEST(Characters, Examples) {
  for (const auto& cls : partitions_of(6)) {
    EXPECT_EQ(mn_character(CycleType{6}, cls), 1);
    EXPECT_EQ(mn_character(CycleType::identity(6), cls),
              oracle::sign_by_sorting(images_of(cls)));
  }
  EXPECT_EQ(mn_character(CycleType{2, 1}, CycleType{1, 1, 1}), 2);
  EXPECT_EQ(mn_character(CycleType{2, 1}, CycleType{2, 1}), 0);
  EXPECT_EQ(mn_character(CycleType{2, 1}, CycleType{3}), -1);
  EXPECT_THROW(mn_character(CycleType{2, 1}, CycleType{2, 2}), DomainError);

  const auto t2 = character_table(2);
  const CycleType one{1, 1}, two{2};
  EXPECT_EQ(t2->value(two, one), 1);
  EXPECT_EQ(t2->value(two, two), 1);
  EXPECT_EQ(t2->value(one, one), 1);
  EXPECT_EQ(t2->value(one, two), -1);
}

// The 2-dimensional representation of S_3 on {x1 + x2 + x3 = 0}, traced directly.
TEST(Characters, StandardRepresentationOfS3) {
  for (const auto& p : oracle::symmetric_group(3)) {
    // trace of the permutation matrix minus the trivial summand
    int trace = 0;
    for (int i = 0; i < 3; ++i) trace += p[static_cast<std::size_t>(i)] == i + 1;
    const auto lens = oracle::lengths(p);
    EXPECT_EQ(mn_character(CycleType{2, 1}, CycleType(lens)), trace - 1);
  }
}

TEST(Characters, DimensionsMatchHookLengths) {
  for (int n = 1; n <= 14; ++n) {
    const auto table = character_table(n);
    for (int i = 0; i < table->size(); ++i) {
      EXPECT_EQ(table->dim(i), BigInt(oracle::hook_dimension(as_vector(table->irreducibles()[i]))));
      EXPECT_EQ(BigInt(table->value(i, table->index_of(CycleType::identity(n)))), table->dim(i));
    }
  }
  const auto t5 = character_table(5);
  std::multiset<BigInt> dims(t5->dims().begin(), t5->dims().end());
  EXPECT_EQ(dims, (std::multiset<BigInt>{1, 1, 4, 4, 5, 5, 6}));
}

TEST(Characters, OrthogonalityAndDimensionSum) {
  for (int n = 1; n <= 12; ++n) {
    const auto t = character_table(n);
    BigInt dims_sq = 0;
    for (const auto& d : t->dims()) dims_sq += d * d;
    EXPECT_EQ(dims_sq, factorial(n));
    for (int i = 0; i < t->size(); ++i) {
      for (int j = i; j < t->size(); ++j) {
        BigInt rows = 0, cols = 0;
        for (int k = 0; k < t->size(); ++k) {
          rows += t->class_size(k) * t->value(i, k) * t->value(j, k);
          cols += BigInt(t->value(k, i)) * t->value(k, j);
        }
        EXPECT_EQ(rows, i == j ? factorial(n) : BigInt(0)) << n;
        EXPECT_EQ(cols * t->class_size(i), i == j ? factorial(n) : BigInt(0)) << n;
      }
    }
  }
}

TEST(Characters, BoundIsEnforced) {
  EXPECT_THROW(character_table(31), ResourceError);
  EXPECT_THROW(character_table(0), DomainError);
}

TEST(StructureConstant, Examples) {
  const CycleType id = CycleType::identity(5), l{3, 2}, other{4, 1};
  EXPECT_EQ(structure_constant(l, id, l), 1);
  EXPECT_EQ(structure_constant(l, id, other), 0);
  EXPECT_EQ(structure_constant(CycleType{2, 1}, CycleType{2, 1}, CycleType{3}), 3);
  // odd * odd is never odd
  EXPECT_EQ(structure_constant(CycleType{2, 1, 1}, CycleType{4}, CycleType{2, 1, 1}), 0);
  for (const auto& a : partitions_of(6))
    for (const auto& b : partitions_of(6))
      for (const auto& c : partitions_of(6))
        if (a.sign() * b.sign() != c.sign()) EXPECT_EQ(structure_constant(a, b, c), 0);
}

TEST(Engines, MatchDefinitionalOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        const auto expected = oracle::structure_constants(n, as_vector(a), as_vector(b));
        for (const auto& p : {product_types_bruteforce(a, b), product_types_character(a, b)}) {
          ASSERT_EQ(p.components.size(), expected.size());
          for (const auto& [t, m] : p.components) EXPECT_EQ(m, BigInt(expected.at(as_vector(t))));
        }
      }
    }
  }
}

TEST(Engines, AgreeUpToDegreeSeven) {
  for (int n = 6; n <= 7; ++n) {
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        EXPECT_EQ(product_types_bruteforce(a, b).components, product_types_character(a, b).components)
            << a.to_string() << " * " << b.to_string();
  }
}

TEST(Eta, Examples) {
  auto p = eta(CycleType{2, 1, 1, 1}, CycleType{5});
  EXPECT_EQ(p.eta(), 2);
  EXPECT_EQ(types_of(p), (std::set<CycleType>{CycleType{4, 1}, CycleType{3, 2}}));

  EXPECT_EQ(eta(CycleType{2, 2, 2}, CycleType{3, 1, 1, 1}).eta(), 2);

  p = eta(CycleType{3, 3}, CycleType{2, 2, 2});
  EXPECT_GE(p.eta(), 3);
  EXPECT_TRUE(p.contains(CycleType{4, 1, 1}));
  EXPECT_TRUE(p.contains(CycleType{6}));
  EXPECT_TRUE(p.contains(CycleType{2, 2, 2}));

  EXPECT_THROW(eta(CycleType{2, 1}, CycleType{2, 2}), DomainError);
  EXPECT_THROW(eta(CycleType{13}, CycleType{13}, Engine::brute), ResourceError);
}

TEST(Eta, Invariants) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : eta_table(n)) {
      BigInt mass = 0;
      for (const auto& [t, m] : p.components) {
        EXPECT_GT(m, 0);
        EXPECT_EQ(t.sign(), p.lhs.sign() * p.rhs.sign());
        mass += m * class_size(t);
      }
      EXPECT_EQ(mass, class_size(p.lhs) * class_size(p.rhs));
      EXPECT_EQ(eta(p.rhs, p.lhs).components, p.components);
    }
  }
}

TEST(MinEta, Examples) {
  EXPECT_EQ(min_eta(7).minimum, 3);
  EXPECT_EQ(min_eta(12).minimum, 2);
  const auto m4 = min_eta(4);
  EXPECT_EQ(m4.minimum, 1);
  EXPECT_EQ(m4.achievers, (std::vector<TypePair>{make_type_pair(CycleType{3, 1}, CycleType{2, 2})}));
  EXPECT_THROW(min_eta(1), DomainError);
}

TEST(EvenClasses, SmallDegrees) {
  for (int n = 1; n <= 12; ++n) {
    int expected = 0;
    for (const auto& t : partitions_of(n)) {
      expected += oracle::sign_by_sorting(images_of(t)) == 1;
    }
    EXPECT_EQ(even_class_count(n), expected);
  }
}

TEST(Json, RoundTrip) {
  const auto p = eta(CycleType{3, 3}, CycleType{2, 2, 2});
  const auto j = to_json(p);
  EXPECT_EQ(j.at("eta"), p.eta());
  const auto q = class_product_from_json(j);
  EXPECT_EQ(q.lhs, p.lhs);
  EXPECT_EQ(q.rhs, p.rhs);
  EXPECT_EQ(q.components, p.components);
}

}  // namespace
}  // namespace classprod
