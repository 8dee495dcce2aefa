#pragma once

// Finite presentations, word-problem oracles through faithful evaluations,
// null expressions and an exact area search.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kdp/abelian_image.hpp"
#include "kdp/free_words.hpp"
#include "kdp/product.hpp"

namespace kdp {

// Images of the generators in Z^rank.
struct AbelianEvaluation {
  int rank = 0;
  std::vector<AbelianVector> images;
};

// Images of the generators in a product of free groups.
struct ProductEvaluation {
  ProductGroup group{0, 0};
  std::vector<ProductElement> images;
};

// A homomorphism from the free group on the alphabet into a group with a
// decidable word problem. The caller declares it faithful on the presented
// group; that is what makes is_null_homotopic meaningful.
class Evaluation {
 public:
  explicit Evaluation(AbelianEvaluation e);
  explicit Evaluation(ProductEvaluation e);

  int source_rank() const;
  bool is_identity(Word const& w) const;
  std::variant<AbelianVector, ProductElement> evaluate(Word const& w) const;

 private:
  std::variant<AbelianEvaluation, ProductEvaluation> impl_;
};

class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  // "< a, b | [a,b], a^2 b^-1 >"
  static Presentation parse(std::string_view text);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  int rank() const noexcept { return alphabet_.size(); }
  std::vector<Word> const& relators() const noexcept { return relators_; }
  Word const& relator(int index) const;
  std::size_t max_relator_length() const;

  // Checks that every relator evaluates to the identity.
  void attach_evaluation(Evaluation e);
  std::optional<Evaluation> const& evaluation() const noexcept {
    return evaluation_;
  }

  std::string to_string() const;
  Word parse_word(std::string_view text) const {
    return kdp::parse_word(text, alphabet_);
  }
  std::string format(Word const& w) const { return kdp::to_string(w, alphabet_); }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
  std::optional<Evaluation> evaluation_;
};

// < x, y | [x,y] > evaluated into Z^2.
Presentation commutator_presentation();

// Throws DomainError when no evaluation is attached.
bool is_null_homotopic(Presentation const& p, Word const& w);

struct NullTerm {
  Word conjugator;
  int relator = 0;  // 0-based
  int sign = 1;
  friend bool operator==(NullTerm const&, NullTerm const&) = default;
};

// w is freely equal to the product of conjugator * relator^sign *
// conjugator^-1 over the terms, in order.
using NullExpression = std::vector<NullTerm>;

Word expression_product(Presentation const& p, NullExpression const& expr);
// Throws DomainError on a bad relator index or sign.
bool verify_null_expression(Presentation const& p, Word const& w,
                            NullExpression const& expr);

// A homomorphism from the free group on the alphabet to F(x, y), used to bound
// area from below: the absolute signed area of the image loop in the plane
// can drop by at most the total projected relator area per move.
struct AreaProjection {
  std::vector<Word> images;  // over {x, y}, one per generator
};

// Signed area enclosed by the lattice path of a closed word in x, y.
std::int64_t signed_area(Word const& w);

// Projections are admissible for p when every relator image is a closed loop
// and the absolute image areas of each relator sum to at most 1.
bool projections_admissible(Presentation const& p,
                            std::vector<AreaProjection> const& projections);

// Pair projections a -> x, b -> y (others trivial), kept greedily while the
// set stays admissible.
std::vector<AreaProjection> detect_projections(Presentation const& p);

struct SearchBudget {
  std::int64_t node_cap = 4'000'000;
  int length_cap_factor = 4;
  // Projections used by the lower bound; empty means detect_projections.
  std::optional<std::vector<AreaProjection>> projections;
  // Disables the projection bound (plain uniform-cost order).
  bool plain = false;
};

struct AreaResult {
  enum class Status { exact, exhausted };
  Status status = Status::exhausted;
  int area = 0;              // exact only
  NullExpression witness;    // exact only
  int lower_bound = 0;       // certified lower bound on the true area
  int start_bound = 0;       // projection bound of the input word
  std::size_t length_cap = 0;
  bool length_pruned = false;  // some successor exceeded the length cap
  std::int64_t nodes = 0;      // distinct words stored

  // True when the exact value does not depend on the length cap.
  bool cap_independent() const {
    return status == Status::exact && (!length_pruned || area == start_bound);
  }
};

// A* over freely reduced words. A move inserts a cyclic permutation of a
// relator or its inverse anywhere and freely reduces; cost 1; the goal is the
// empty word. The projection bound is consistent, so the first goal reached
// at the current frontier value is optimal among paths inside the cap.
// Throws DomainError when the word is provably not null-homotopic.
AreaResult area_search(Presentation const& p, Word const& w,
                       SearchBudget const& budget = {});

struct DehnResult {
  int n = 0;
  int value = 0;              // best exact area found
  bool exact = true;          // every inner search returned exact
  Word witness;               // a word attaining value
  std::int64_t words_checked = 0;  // null-homotopic words searched
};

// Max area over null-homotopic reduced words of length <= n, up to cyclic
// permutation and inversion. Requires an attached evaluation.
DehnResult dehn_function(Presentation const& p, int n,
                         SearchBudget const& budget = {}, int jobs = 1);

}  // namespace kdp
