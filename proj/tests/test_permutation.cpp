#include <gtest/gtest.h>

#include <random>
#include <set>

#include "classprod/errors.hpp"
#include "classprod/permutation.hpp"
#include "oracles.hpp"

namespace classprod {
namespace {

Permutation P(const char* text, int n) { return Permutation::parse(text, n); }

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

TEST(Compose, RightFactorActsFirst) {
  EXPECT_EQ(compose(P("(1 2)", 3), P("(1 3)", 3)), P("(1 3 2)", 3));
  const Permutation p = compose(P("(1 2)(3 4)(5 6)", 6), P("(1 2 3)(4 5 6)", 6));
  EXPECT_EQ(p, P("(2 4 6 3)", 6));
  EXPECT_EQ(p.fixed_points(), (std::vector<int>{1, 5}));
  const Permutation a = P("(1 4 2)", 5);
  EXPECT_EQ(compose(Permutation::identity(5), a), a);
  EXPECT_THROW(compose(P("(1 2)", 3), P("(1 2)", 4)), DomainError);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(P("(1 2 3)", 3)), P("(1 3 2)", 3));
  EXPECT_EQ(inverse(Permutation::identity(4)), Permutation::identity(4));
  EXPECT_EQ(inverse(P("(1 2)", 2)), P("(1 2)", 2));
}

TEST(Conjugate, Examples) {
  const Permutation a = P("(1 2 3)", 3);
  EXPECT_EQ(conjugate(a, Permutation::identity(3)), a);
  // g^-1 a g with g = (1 2): 1 -> 3, 3 -> 2, 2 -> 1
  const Permutation c = conjugate(a, P("(1 2)", 3));
  EXPECT_EQ(c(1), 3);
  EXPECT_EQ(c(3), 2);
  EXPECT_EQ(c(2), 1);
  EXPECT_EQ(c, P("(1 3 2)", 3));
}

TEST(CycleDecomposition, CanonicalForm) {
  const Permutation p = P("(1 3)(2 5 6)(4)(7)", 7);
  EXPECT_EQ(cycle_decomposition(p), (std::vector<std::vector<int>>{{2, 5, 6}, {1, 3}, {4}, {7}}));
  EXPECT_EQ(cycle_type(p), (CycleType{3, 2, 1, 1}));
  EXPECT_EQ(cycle_decomposition(Permutation::identity(3)),
            (std::vector<std::vector<int>>{{1}, {2}, {3}}));
  EXPECT_EQ(cycle_decomposition(P("(2 4 6 3)", 6)),
            (std::vector<std::vector<int>>{{2, 4, 6, 3}, {1}, {5}}));
  // rotated to start at the minimum
  EXPECT_EQ(cycle_decomposition(P("(5 3 4)", 5)).front(), (std::vector<int>{3, 4, 5}));
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(5)), CycleType::identity(5));
  EXPECT_EQ(cycle_type(P("(1 2)(3 4)(5 6)", 6)), (CycleType{2, 2, 2}));
  const Permutation p = compose(P("(1 2 3)", 4), P("(1 2)(3 4)", 4));
  EXPECT_EQ(p, P("(1 3 4)(2)", 4));
  EXPECT_EQ(cycle_type(p), (CycleType{3, 1}));
}

TEST(CanonicalRep, Blocks) {
  EXPECT_EQ(canonical_rep(CycleType{5}), P("(1 2 3 4 5)", 5));
  EXPECT_EQ(canonical_rep(CycleType{2, 2, 1}), P("(1 2)(3 4)", 5));
  EXPECT_EQ(canonical_rep(CycleType{1, 1, 1}), Permutation::identity(3));
  EXPECT_EQ(canonical_rep(CycleType{3, 2}), P("(1 2 3)(4 5)", 5));
  for (const auto& t : partitions_of(9)) EXPECT_EQ(cycle_type(canonical_rep(t)), t);
}

TEST(EnumerateClass, Examples) {
  int count = 0;
  auto s = enumerate_class(CycleType{2, 1, 1});
  while (s.next()) ++count;
  EXPECT_EQ(count, 6);

  auto id = enumerate_class(CycleType::identity(4));
  EXPECT_EQ(id.next(), Permutation::identity(4));
  EXPECT_FALSE(id.next());

  std::set<std::vector<int>> three;
  auto c3 = enumerate_class(CycleType{3});
  while (auto p = c3.next()) three.insert({p->images().begin(), p->images().end()});
  EXPECT_EQ(three, (std::set<std::vector<int>>{{2, 3, 1}, {3, 1, 2}}));
}

TEST(EnumerateClass, MatchesFilteringAllOfSn) {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, std::set<std::vector<int>>> by_type;
    for (const auto& p : oracle::symmetric_group(n)) by_type[oracle::lengths(p)].insert(p);
    for (const auto& t : partitions_of(n)) {
      std::set<std::vector<int>> produced;
      std::size_t count = 0;
      auto s = enumerate_class(t);
      while (s.advance()) {
        produced.insert({s.current_images().begin(), s.current_images().end()});
        ++count;
      }
      EXPECT_EQ(count, produced.size()) << "duplicates in " << t.to_string();
      EXPECT_EQ(produced, by_type[std::vector<int>(t.parts().begin(), t.parts().end())]) << t.to_string();
    }
  }
}

TEST(EnumerateClass, CountEqualsClassSize) {
  for (const auto& t : partitions_of(9)) {
    std::uint64_t count = 0;
    auto s = enumerate_class(t);
    while (s.advance()) ++count;
    EXPECT_EQ(BigInt(count), class_size(t)) << t.to_string();
  }
}

TEST(EnumerateClass, BoundIsEnforced) {
  EXPECT_THROW(enumerate_class(CycleType{12}), ResourceError);  // 11! elements
  Limits tight;
  tight.max_enumeration = 5;
  EXPECT_THROW(enumerate_class(CycleType{2, 1, 1}, tight), ResourceError);
}

TEST(ConjugatorBetween, Examples) {
  const Permutation a = P("(1 2)", 4);
  EXPECT_EQ(conjugate(a, conjugator_between(a, a)), a);
  const Permutation b = P("(3 4)", 4);
  EXPECT_EQ(conjugate(a, conjugator_between(a, b)), b);
  const Permutation c = P("(1 2 3)", 3), d = P("(1 3 2)", 3);
  EXPECT_EQ(conjugate(c, P("(2 3)", 3)), d);
  EXPECT_EQ(conjugate(c, conjugator_between(c, d)), d);
  EXPECT_THROW(conjugator_between(P("(1 2)", 4), P("(1 2 3)", 4)), DomainError);
}

TEST(Embed, Examples) {
  const Permutation e = embed(P("(1 2)", 2), 4);
  EXPECT_EQ(e, P("(1 2)(3)(4)", 4));
  EXPECT_EQ(cycle_type(e), (CycleType{2, 1, 1}));
  const Permutation a = P("(1 3)", 5);
  EXPECT_EQ(embed(a, 5), a);
  EXPECT_EQ(embed(P("(1 2 3)(4 5 6)", 6), 7).fixed_point_count(), 1);
  EXPECT_THROW(embed(a, 4), DomainError);
  EXPECT_EQ(cycle_type(embed(a, 8)), type_union(cycle_type(a), CycleType::identity(3)));
}

TEST(PermutationParse, ValidatesInput) {
  EXPECT_EQ(P("", 3), Permutation::identity(3));
  EXPECT_EQ(P("()", 3), Permutation::identity(3));
  EXPECT_EQ(P("e", 3), Permutation::identity(3));
  EXPECT_EQ(P(" ( 1 2 ) ( 3 4 ) ", 4).to_string(), "(1 2)(3 4)");
  EXPECT_THROW(P("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(P("(1 5)", 4), ParseError);
  EXPECT_THROW(P("(1 2", 4), ParseError);
  EXPECT_THROW(P("1 2", 4), ParseError);
  EXPECT_THROW(P("(1 x)", 4), ParseError);
  EXPECT_THROW(P("(0 1)", 4), ParseError);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_THROW(Permutation(std::vector<int>{}), DomainError);
}

TEST(Properties, GroupLawsOnRandomInputs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Permutation a = random_permutation(rng, n), b = random_permutation(rng, n),
                      c = random_permutation(rng, n), g = random_permutation(rng, n),
                      h = random_permutation(rng, n);
    const Permutation e = Permutation::identity(n);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(e, a), a);
    EXPECT_EQ(compose(a, e), a);
    EXPECT_EQ(compose(a, inverse(a)), e);
    EXPECT_EQ(compose(inverse(a), a), e);
    EXPECT_EQ(cycle_type(conjugate(a, g)), cycle_type(a));
    EXPECT_EQ(conjugate(a, compose(g, h)), conjugate(conjugate(a, g), h));
    EXPECT_EQ(cycle_type(compose(a, b)), cycle_type(compose(b, a)));
    EXPECT_EQ(Permutation::parse(a.to_string(), n), a);
  }
}

TEST(Properties, ConjugatorBetweenRandomClassMembers) {
  std::mt19937_64 rng(99);
  for (const auto& t : partitions_of(7)) {
    std::vector<Permutation> members;
    auto s = enumerate_class(t);
    while (auto p = s.next()) members.push_back(*p);
    for (int k = 0; k < 10; ++k) {
      const auto& a = members[rng() % members.size()];
      const auto& b = members[rng() % members.size()];
      EXPECT_EQ(conjugate(a, conjugator_between(a, b)), b);
    }
  }
}

TEST(ExtendPartial, HonoursArrowsAndType) {
  using Arrows = std::vector<std::pair<int, int>>;
  auto check = [](const CycleType& t, const Arrows& arrows) {
    auto p = extend_partial(t, arrows);
    ASSERT_TRUE(p) << t.to_string();
    EXPECT_EQ(cycle_type(*p), t);
    for (auto [x, y] : arrows) EXPECT_EQ((*p)(x), y);
  };
  check(CycleType{3, 1, 1, 1}, {{3, 2}, {2, 1}});
  check(CycleType{2, 2, 2}, {{1, 2}, {2, 1}});
  check(CycleType{3, 2, 1}, {{1, 2}, {3, 4}});
  check(CycleType{4, 1, 1}, {{1, 2}, {3, 4}});
  check(CycleType{3, 3}, {{1, 2}, {2, 4}});
  check(CycleType{2, 1}, {{3, 3}});
  // two 2-point chains cannot both fit a 3-cycle
  EXPECT_FALSE(extend_partial(CycleType{3, 1, 1}, Arrows{{1, 2}, {3, 4}}));
  // a closed 2-cycle needs a part equal to 2
  EXPECT_FALSE(extend_partial(CycleType{3, 3}, Arrows{{1, 2}, {2, 1}}));
  // inconsistent arrows
  EXPECT_FALSE(extend_partial(CycleType{4}, Arrows{{1, 2}, {1, 3}}));
}

}  // namespace
}  // namespace classprod
