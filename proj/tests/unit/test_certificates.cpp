#include <gtest/gtest.h>

#include "kdp/certificates.hpp"
#include "kdp/error.hpp"
#include "kdp/json_io.hpp"
#include "kdp/subgroup_metrics.hpp"
#include "random_words.hpp"

using namespace kdp;

TEST(Certificates, TestWordShape) {
  Word w{1};
  Word u{2};
  Word v{3};
  EXPECT_EQ(test_word(w, u, v, 2), (Word{1, 2, 3, 2, 3, -1, -3, -2, -3, -2}));
}

TEST(Certificates, CombinedAlphabetRejectsClashes) {
  EXPECT_THROW(combine_alphabets(Alphabet({"a"}), Alphabet({"a"}), Alphabet({"b"})),
               DomainError);
}

TEST(Certificates, CubicWordLengths) {
  for (int n = 1; n <= 4; ++n) {
    auto dw = cubic_words(n);
    EXPECT_EQ(dw.w.size(), static_cast<std::size_t>(4 * n));
    EXPECT_EQ(dw.test_word.size(), static_cast<std::size_t>(12 * n));
    auto alpha = cubic_alphabet();
    // w evaluates to h(n) in F2 x F2.
    EXPECT_EQ(alpha.eval(dw.w), h_family(n));
  }
}

TEST(Certificates, SubstitutionIdentityOnRandomWords) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    auto w = sample::random_word(rng, 3, 1 + t % 25);
    EXPECT_TRUE(substitution_identity_holds(w));
    auto [first, second] = substitution_split(w);
    auto alpha = cubic_alphabet();
    Word over_combined = substitute(w, {{1, Word{7}}, {2, Word{8}}, {3, Word{9}}});
    auto e = alpha.eval(over_combined);
    EXPECT_EQ(e[0], first);
    EXPECT_EQ(e[1], second);
  }
}

TEST(Certificates, DerivedNullExpressionVerifies) {
  auto s = standard_generators(KernelGroup(2, 2, 2));
  auto p = commutator_presentation();
  for (int n = 1; n <= 3; ++n) {
    auto word = rewrite_in_generators(KernelGroup(2, 2, 2), h_family(n));
    auto expr = derive_null_expression(word, n);
    EXPECT_EQ(static_cast<int>(expr.size()), commutator_occurrences(word));
    auto [first, second] = substitution_split(word);
    EXPECT_TRUE(second.empty());
    EXPECT_TRUE(verify_null_expression(p, first, expr));
    // Area n^2 is a lower bound on any such certificate.
    EXPECT_GE(static_cast<int>(expr.size()), n * n);
  }
  EXPECT_THROW(derive_null_expression(Word{1}, 1), Error);
}

TEST(Certificates, ToyScenarioHypotheses) {
  for (int k = 1; k <= 2; ++k) {
    auto sc = toy_scenario(k);
    EXPECT_NO_THROW(check_scenario(sc));
    EXPECT_TRUE(projections_admissible(sc.presentation, sc.projections));
  }
}

TEST(Certificates, ToySmallestInstanceHolds) {
  auto rep = toy_amalgam_check(1, 1);
  ASSERT_EQ(rep.area.status, AreaResult::Status::exact);
  EXPECT_EQ(rep.subgroup_distance, 1);
  EXPECT_EQ(rep.bound, 2);
  EXPECT_EQ(rep.area.area, 6);
  EXPECT_EQ(rep.verdict, ToyReport::Verdict::holds);
  EXPECT_TRUE(verify_null_expression(toy_scenario(1).presentation, rep.word,
                                     rep.area.witness));
}

TEST(Certificates, LowerBoundReport) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = lower_bound_report(n);
    EXPECT_TRUE(rep.conclusive);
    EXPECT_EQ(rep.area_lower_bound, 2 * n * n * n);
    EXPECT_EQ(rep.computed_length, static_cast<std::size_t>(12 * n));
    EXPECT_EQ(rep.stated_length, static_cast<std::size_t>(16 * n));
    for (auto const& e : rep.evidence) {
      EXPECT_TRUE(e.passed) << e.verifier;
      EXPECT_EQ(e.inputs_hash.size(), 16u);
    }
  }
  EXPECT_EQ(to_json(lower_bound_report(2)).dump(), to_json(lower_bound_report(2)).dump());
}

TEST(Certificates, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(JsonIo, NullExpressionRoundTrip) {
  auto p = commutator_presentation();
  auto w = commutator(Word{1, 1}, Word{2, 2});
  auto r = area_search(p, w);
  auto back = null_expression_from_json(to_json(r.witness, p), p);
  EXPECT_EQ(back, r.witness);
  EXPECT_THROW(null_expression_from_json(Json::parse(R"([{"conj":"x"}])"), p),
               DomainError);
  EXPECT_THROW(null_expression_from_json(
                   Json::parse(R"([{"conj":"x","rel":0,"sign":2}])"), p),
               DomainError);
}
