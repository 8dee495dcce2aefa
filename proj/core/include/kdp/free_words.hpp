#pragma once

// Exact arithmetic in finitely generated free groups.
//
// A Word is always stored freely reduced. Words do not carry their rank; the
// ambient FreeGroup descriptor does, and every FreeGroup operation rejects
// letters outside its rank.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kdp {

// A basis symbol e_j (sign +1) or its formal inverse (sign -1). Generator
// indices are 1-based.
class Letter {
 public:
  constexpr Letter() = default;
  Letter(int generator, int sign);

  // +j for e_j, -j for e_j^-1.
  static Letter from_signed(int value);

  int generator() const noexcept { return value_ < 0 ? -value_ : value_; }
  int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  int signed_value() const noexcept { return value_; }
  Letter inverse() const noexcept { return raw(-value_); }
  bool cancels(Letter other) const noexcept { return value_ == -other.value_; }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;

 private:
  static constexpr Letter raw(int v) {
    Letter l;
    l.value_ = static_cast<std::int16_t>(v);
    return l;
  }
  std::int16_t value_ = 1;
};

class Word {
 public:
  Word() = default;
  // Reduces eagerly.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<int> signed_letters);

  static Word from_signed(std::span<int const> signed_letters);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Largest generator index occurring, 0 for the empty word.
  int max_generator() const noexcept;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence (no rank check).
Word reduce(std::span<Letter const> raw);

using Substitution = std::map<int, Word>;

// Rank descriptor for F_m. All operations validate their operands.
class FreeGroup {
 public:
  explicit FreeGroup(int rank);

  int rank() const noexcept { return rank_; }

  void check(Word const& w) const;
  Word reduce(std::span<Letter const> raw) const;
  Word generator(int j) const;
  Word mul(Word const& u, Word const& v) const;
  Word inv(Word const& u) const;
  Word power(Word const& u, int k) const;
  // [x, y] = x y x^-1 y^-1
  Word commutator(Word const& x, Word const& y) const;
  // x^y = y x y^-1
  Word conj(Word const& x, Word const& y) const;
  // Homomorphic image; every generator occurring in w needs an image.
  Word substitute(Word const& w, Substitution const& images) const;
  long exponent_sum(Word const& w, int j) const;

  friend bool operator==(FreeGroup const&, FreeGroup const&) = default;

 private:
  int rank_;
};

// Unchecked helpers shared by the modules that already validated ranks.
Word concat(Word const& u, Word const& v);
Word inverse(Word const& u);
Word word_power(Word const& u, long k);
Word commutator(Word const& x, Word const& y);
Word conjugate(Word const& x, Word const& y);
Word substitute(Word const& w, Substitution const& images);
long exponent_sum(Word const& w, int j);
Word cyclic_reduction(Word const& w);

// Symbol names for a free basis, used by the text grammar.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // e1..em, plus the aliases x, y when m == 2. Printing uses the aliases.
  static Alphabet standard(int rank);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  std::string const& name(int generator) const;
  std::vector<std::string> const& names() const noexcept { return names_; }
  // 0 when unknown.
  int lookup(std::string_view name) const;
  void add_alias(std::string alias, int generator);

  FreeGroup group() const { return FreeGroup(size()); }

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Grammar:
//   word := term*              (whitespace or juxtaposition)
//   term := atom ('^' integer)?
//   atom := name | '1' | '(' word ')' | '[' word ',' word ']'
// Throws ParseError with 1-based line and column.
Word parse_word(std::string_view text, Alphabet const& alphabet);

// Canonical form: letters separated by single spaces, inverses as `name^-1`,
// the empty word as `1`.
std::string to_string(Word const& w, Alphabet const& alphabet);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace kdp
