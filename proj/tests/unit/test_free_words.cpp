#include <gtest/gtest.h>

#include "kdp/error.hpp"
#include "kdp/free_words.hpp"
#include "random_words.hpp"

using namespace kdp;

namespace {

// Quadratic oracle: delete the first cancelling pair until none is left.
std::vector<int> naive_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<int> signed_letters(Word const& w) {
  std::vector<int> out;
  for (auto l : w) {
    out.push_back(l.signed_value());
  }
  return out;
}

}  // namespace

TEST(FreeWords, ReductionMatchesNaiveOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    auto raw = sample::random_letters(rng, 3, 40);
    EXPECT_EQ(signed_letters(Word::from_signed(raw)), naive_reduce(raw));
  }
}

TEST(FreeWords, GroupAxioms) {
  std::mt19937_64 rng(12);
  FreeGroup f(3);
  for (int t = 0; t < 200; ++t) {
    auto a = sample::random_word(rng, 3, 12);
    auto b = sample::random_word(rng, 3, 12);
    auto c = sample::random_word(rng, 3, 12);
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_TRUE(f.mul(a, f.inv(a)).empty());
    EXPECT_EQ(f.inv(f.mul(a, b)), f.mul(f.inv(b), f.inv(a)));
    EXPECT_EQ(f.commutator(a, b),
              f.mul(f.mul(a, b), f.mul(f.inv(a), f.inv(b))));
    EXPECT_EQ(f.exponent_sum(f.mul(a, b), 2),
              f.exponent_sum(a, 2) + f.exponent_sum(b, 2));
  }
}

TEST(FreeWords, PowersAndConjugation) {
  FreeGroup f(2);
  Word x{1};
  Word y{2};
  EXPECT_EQ(f.power(x, 3), (Word{1, 1, 1}));
  EXPECT_EQ(f.power(x, -2), (Word{-1, -1}));
  EXPECT_TRUE(f.power(x, 0).empty());
  EXPECT_EQ(f.conj(x, y), (Word{2, 1, -2}));
}

TEST(FreeWords, RankIsChecked) {
  FreeGroup f(2);
  EXPECT_THROW(f.check(Word{3}), RankError);
  EXPECT_THROW(f.mul(Word{1}, Word{-3}), RankError);
  EXPECT_THROW(FreeGroup(-1), RankError);
}

TEST(FreeWords, SubstitutionIsHomomorphic) {
  std::mt19937_64 rng(13);
  FreeGroup f(2);
  Substitution s{{1, Word{1, 2}}, {2, Word{-1}}};
  for (int t = 0; t < 100; ++t) {
    auto a = sample::random_word(rng, 2, 10);
    auto b = sample::random_word(rng, 2, 10);
    EXPECT_EQ(f.substitute(f.mul(a, b), s),
              f.mul(f.substitute(a, s), f.substitute(b, s)));
  }
  EXPECT_THROW(f.substitute(Word{2}, Substitution{{1, Word{2}}}), DomainError);
}

TEST(FreeWords, CyclicReduction) {
  EXPECT_EQ(cyclic_reduction(Word{2, 1, 1, -2}), (Word{1, 1}));
  EXPECT_EQ(cyclic_reduction(Word{1, 2, -1}), (Word{2}));
  EXPECT_TRUE(cyclic_reduction(Word{}).empty());
}

TEST(FreeWords, ParseAndPrintRoundTrip) {
  auto a = Alphabet::standard(2);
  EXPECT_EQ(parse_word("[x^2, y] x^-1", a), parse_word("x x y x^-2 y^-1 x^-1", a));
  EXPECT_EQ(parse_word("(x y)^-2", a), (Word{-2, -1, -2, -1}));
  EXPECT_EQ(parse_word("e1 e2", a), (Word{1, 2}));
  EXPECT_TRUE(parse_word("1", a).empty());
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    auto w = sample::random_word(rng, 2, 15);
    EXPECT_EQ(parse_word(to_string(w, a), a), w);
  }
  EXPECT_EQ(to_string(Word{}, a), "1");
  EXPECT_EQ(to_string(Word{1, -2}, a), "x y^-1");
}

TEST(FreeWords, ParseErrorsCarryPosition) {
  auto a = Alphabet::standard(2);
  try {
    parse_word("x y\n  z", a);
    FAIL() << "expected a parse error";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_word("[x, y", a), ParseError);
  EXPECT_THROW(parse_word("x^", a), ParseError);
  EXPECT_THROW(parse_word("(x", a), ParseError);
}

TEST(FreeWords, StandardAlphabetNames) {
  auto a3 = Alphabet::standard(3);
  EXPECT_EQ(a3.lookup("e3"), 3);
  EXPECT_EQ(a3.lookup("x"), 0);
  auto a2 = Alphabet::standard(2);
  EXPECT_EQ(a2.lookup("x"), 1);
  EXPECT_EQ(a2.lookup("e2"), 2);
}
