#pragma once

// Lower-bound certificates for areas of commutator test words [w, (uv)^n] in
// amalgams, the instance built from K^3_2(2) = L_1 *_M L_2, and a brute-force
// check on a small amalgam of free abelian groups.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdp/free_words.hpp"
#include "kdp/presentation_area.hpp"
#include "kdp/product.hpp"

namespace kdp {

// Symbols of A1, A2 and B side by side; throws DomainError on a name clash.
Alphabet combine_alphabets(Alphabet const& a1, Alphabet const& a2,
                           Alphabet const& b);

// w (uv)^n w^-1 (uv)^-n, freely reduced.
Word test_word(Word const& w, Word const& u, Word const& v, int n);

// Symbols: A1 = {xd, y1, y2}, A2 = {x1, x2, yd}, B = {b1, b2, b3}, realized
// in F(x,y) x F(x,y) as xd = (x, x^-1), y1 = (y, 1), y2 = (1, y),
// x1 = (x, 1), x2 = (1, x), yd = (y, y^-1), b1 = xd, b2 = yd, b3 = ([x,y], 1).
struct CubicAlphabet {
  Alphabet a1;
  Alphabet a2;
  Alphabet b;
  Alphabet combined;
  std::vector<ProductElement> realizations;  // by combined symbol
  ProductElement eval(Word const& w) const;
};

CubicAlphabet cubic_alphabet();

struct CubicWords {
  int n = 0;
  Word w;          // [xd^n, y1^n] over the combined alphabet
  Word test_word;  // [w, (y2 x2)^n]
};

CubicWords cubic_words(int n);

// For w over B = {b1, b2, b3} (symbols 1, 2, 3):
// first = w(x, y, [x,y]), second = w(x^-1, y^-1, 1), both in F(x, y).
std::pair<Word, Word> substitution_split(Word const& w);

// Checks eval(w) == (first, second) componentwise.
bool substitution_identity_holds(Word const& w);

// For w over B evaluating to h(n): one conjugated [x,y]^(+-1) per occurrence
// of b3^(+-1), conjugated by the prefix of w(x, y, [x,y]) before it with the
// b3 occurrences deleted. Verifies over < x, y | [x,y] >.
NullExpression derive_null_expression(Word const& w, int n);

// Number of occurrences of b3 or its inverse.
int commutator_occurrences(Word const& w);

// The amalgam < a, c | [a,c] > *_<s> < b, d | [b,d] > with s = a^-1 c = b^-1 d.
struct AmalgamScenario {
  Presentation presentation;
  std::vector<AreaProjection> projections;
  int k = 0;
  Word w;  // (a^-1 c)^k
  Word u;  // a
  Word v;  // b
  ProductElement h;  // eval(s)^k
};

// Faithful evaluation into F(x, y) x F(x, y), using only x in the second
// factor: a -> (x, 1), c -> (x, x), b -> (y, 1), d -> (y, x), s -> (1, x).
AmalgamScenario toy_scenario(int k);

// Throws VerificationError when a hypothesis of the area inequality fails.
void check_scenario(AmalgamScenario const& sc);

struct ToyReport {
  int k = 0;
  int n = 0;
  Word word;
  std::size_t word_length = 0;
  int subgroup_distance = 0;  // d_{s}(1, s^k) by BFS
  int bound = 0;              // 2 n d
  AreaResult area;
  enum class Verdict { holds, inconclusive, violated };
  Verdict verdict = Verdict::inconclusive;
  // The certified lower bound already reaches the inequality.
  bool bound_certified = false;
};

ToyReport toy_amalgam_check(int k, int n, SearchBudget const& budget = {});

struct Evidence {
  std::string verifier;
  std::string inputs_hash;  // FNV-1a of the canonical inputs, hex
  bool passed = false;
  nlohmann::ordered_json detail;
};

struct CertificateReport {
  int n = 0;
  std::string test_word;
  std::size_t computed_length = 0;
  std::size_t stated_length = 0;  // 16n
  int distance_lower_bound = 0;   // n^2
  bool distance_exact = false;    // d_B(1, h_n) found by BFS
  int distance_value = 0;         // when distance_exact
  std::int64_t area_lower_bound = 0;  // 2 n * distance_lower_bound
  bool conclusive = false;  // the area fact was exact
  std::vector<Evidence> evidence;
};

struct CertifyBudget {
  SearchBudget search;
  int radius = 9;
};

// Throws VerificationError naming the failing component.
CertificateReport lower_bound_report(int n, CertifyBudget const& budget = {});

std::string fnv1a_hex(std::string_view data);

}  // namespace kdp
