#include <gtest/gtest.h>

#include "kdp/amalgam_splitting.hpp"
#include "kdp/error.hpp"
#include "random_words.hpp"

using namespace kdp;

TEST(AmalgamSplitting, HatGeneratorsAreInTheWholeGroupNotInM) {
  SplittingData d(3, 2);
  for (auto const& g : d.hat_generators().realizations()) {
    EXPECT_TRUE(d.whole().contains(g));
    EXPECT_FALSE(g.factors.back().empty());
  }
  EXPECT_EQ(d.hat_generators().size(), 2);
}

TEST(AmalgamSplitting, DecompositionReassembles) {
  for (auto [n, m] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
    SplittingData d(n, m);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto gamma = random_kernel_element(d.whole(), 10, seed);
      auto parts = semidirect_decompose(d, gamma);
      auto const& amb = d.whole().ambient();
      EXPECT_TRUE(parts.m_part.factors.back().empty());
      EXPECT_TRUE(d.in_M(d.restrict(parts.m_part)));
      EXPECT_EQ(amb.mul(parts.m_part, d.hat_generators().eval(parts.hat_word)),
                gamma);

      // The syllable form rebuilds the same element.
      auto form = syllable_form(d, gamma);
      GenWord hat;
      for (auto const& b : form.blocks) {
        EXPECT_NE(b.exponent, 0);
        hat = concat(hat, word_power(Word{b.k}, b.exponent));
      }
      EXPECT_EQ(amb.mul(d.lift(form.m_part), d.hat_generators().eval(hat)), gamma);
    }
  }
}

TEST(AmalgamSplitting, BlocksAreMaximalRuns) {
  auto blocks = blocks_of(Word{1, 1, 2, -1, -1, -1, 2});
  std::vector<Block> expected{{1, 2}, {2, 1}, {1, -3}, {2, 1}};
  EXPECT_EQ(blocks, expected);
  EXPECT_TRUE(blocks_of(Word{}).empty());
}

// in_M agrees with the conjunction of the L_k predicates and p_k = 0, on
// uniformly sampled 2-factor elements pushed into the kernel.
TEST(AmalgamSplitting, PredicateEquivalence) {
  std::mt19937_64 rng(41);
  SplittingData d(3, 2);
  int in_m = 0;
  for (int t = 0; t < 400; ++t) {
    auto g = sample::random_element(rng, 2, 2, 4);
    if (t % 2 == 0) {
      // Bias half the samples into M.
      auto theta = d.lower().theta(g);
      g.factors[1] = concat(g.factors[1],
                            concat(word_power(Word{1}, -theta[0]),
                                   word_power(Word{2}, -theta[1])));
    }
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(d.in_M(g), d.in_Lk(k, g) && d.p_k(k, g) == 0);
    }
    in_m += d.in_M(g);
  }
  EXPECT_GT(in_m, 100);
}

TEST(AmalgamSplitting, SingleBlockImage) {
  SplittingData d(3, 2);
  auto amb = d.whole().ambient();
  auto gamma = parse_product_element("x y x^-1 y^-1 | y | y^-1", amb);
  auto form = syllable_form(d, gamma);
  ASSERT_LE(form.blocks.size(), 1u);
  auto img = single_block_image(d, form);
  EXPECT_EQ(img.size(), 2u);
  // The image drops the last factor and moves the hat letters onto factor n-1.
  EXPECT_EQ(img, parse_product_element("x y x^-1 y^-1 | y", d.lower().ambient()));
}

TEST(AmalgamSplitting, RejectsNonMembers) {
  SplittingData d(3, 2);
  EXPECT_THROW(semidirect_decompose(
                   d, parse_product_element("x | 1 | 1", d.whole().ambient())),
               DomainError);
  EXPECT_THROW(SplittingData(1, 2), DomainError);
}
