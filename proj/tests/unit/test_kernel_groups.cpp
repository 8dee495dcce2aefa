#include <gtest/gtest.h>

#include "kdp/error.hpp"
#include "kdp/kernel_groups.hpp"
#include "random_words.hpp"

using namespace kdp;

TEST(KernelGroups, NameRoundTrip) {
  auto g = KernelGroup::parse("K3_2_2");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.r(), 2);
  EXPECT_EQ(g.name(), "K3_2_2");
  EXPECT_THROW(KernelGroup::parse("K3_2"), ParseError);
  EXPECT_THROW(KernelGroup(2, 2, 3), Error);
}

TEST(KernelGroups, MembershipIsThetaZero) {
  KernelGroup g(2, 2, 1);
  auto amb = g.ambient();
  EXPECT_TRUE(g.contains(parse_product_element("x | x^-1", amb)));
  EXPECT_TRUE(g.contains(parse_product_element("y | 1", amb)));
  EXPECT_FALSE(g.contains(parse_product_element("x | x", amb)));
}

TEST(KernelGroups, GeneratorCounts) {
  using F = StandardGenerators::Family;
  auto s = standard_generators(KernelGroup(3, 3, 2));
  EXPECT_EQ(s.count(F::s1), 4u);  // r (n-1)
  EXPECT_EQ(s.count(F::s2), 3u);  // (m-r) n
  EXPECT_EQ(s.count(F::s3), 1u);  // r choose 2
  for (auto const& g : s.realizations()) {
    EXPECT_TRUE(KernelGroup(3, 3, 2).contains(g));
  }
}

TEST(KernelGroups, CollectExpandsBack) {
  std::mt19937_64 rng(31);
  KernelGroup g(2, 3, 2);
  int tried = 0;
  while (tried < 200) {
    auto w = sample::random_word(rng, 3, 14);
    if (exponent_sum(w, 1) != 0 || exponent_sum(w, 2) != 0) {
      continue;
    }
    ++tried;
    auto terms = collect_kernel_word(w, 2);
    EXPECT_EQ(expand(terms), w);
    for (auto const& t : terms) {
      EXPECT_TRUE(t.commutator ? (t.i < t.j && t.j <= 2) : t.i > 2);
    }
  }
}

TEST(KernelGroups, RewriteRoundTripOnFamilies) {
  for (auto name : {"K2_2_1", "K2_2_2", "K3_2_2", "K2_3_2", "K3_3_1"}) {
    auto g = KernelGroup::parse(name);
    auto s = standard_generators(g);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto e = random_kernel_element(g, 8, seed);
      ASSERT_TRUE(g.contains(e));
      EXPECT_EQ(s.eval(rewrite_in_generators(g, e)), e) << name << " " << seed;
    }
  }
}

// Independent of random_kernel_element: uniform ambient words forced into
// the kernel by correcting the last factor.
TEST(KernelGroups, RewriteRoundTripOnAmbientSamples) {
  std::mt19937_64 rng(32);
  KernelGroup g(3, 2, 2);
  auto s = standard_generators(g);
  for (int t = 0; t < 100; ++t) {
    auto e = sample::random_element(rng, 3, 2, 10);
    auto theta = g.theta(e);
    Word fix = concat(word_power(Word{1}, -theta[0]), word_power(Word{2}, -theta[1]));
    e.factors[2] = concat(e.factors[2], fix);
    ASSERT_TRUE(g.contains(e));
    EXPECT_EQ(s.eval(rewrite_in_generators(g, e)), e);
  }
}

TEST(KernelGroups, RewriteRejectsNonMembers) {
  KernelGroup g(2, 2, 2);
  EXPECT_THROW(rewrite_in_generators(g, parse_product_element("x | 1", g.ambient())),
               DomainError);
}

TEST(KernelGroups, NonStandardMapsTransport) {
  FactorHom twisted(2, 1, {AbelianVector(std::vector<std::int64_t>{2}), AbelianVector(std::vector<std::int64_t>{1})});
  KernelGroup g(2, 2, 1, {twisted, FactorHom::standard(2, 1)});
  auto s = standard_generators(g);
  for (auto const& r : s.realizations()) {
    EXPECT_TRUE(g.contains(r));
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto e = random_kernel_element(g, 6, seed);
    EXPECT_EQ(s.eval(rewrite_in_generators(g, e)), e);
  }
}

TEST(KernelGroups, RandomElementsAreDeterministic) {
  KernelGroup g(3, 2, 2);
  EXPECT_EQ(random_kernel_element(g, 10, 7), random_kernel_element(g, 10, 7));
}
