#include "kdp/free_words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "kdp/error.hpp"

namespace kdp {

Letter::Letter(int generator, int sign) {
  if (generator < 1 || generator > std::numeric_limits<std::int16_t>::max()) {
    throw RankError("generator index " + std::to_string(generator) +
                    " out of range");
  }
  if (sign != 1 && sign != -1) {
    throw Error("letter sign must be +1 or -1");
  }
  value_ = static_cast<std::int16_t>(generator * sign);
}

Letter Letter::from_signed(int value) {
  if (value == 0) {
    throw RankError("generator index 0 out of range");
  }
  return value > 0 ? Letter(value, 1) : Letter(-value, -1);
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<int> signed_letters) {
  letters_.reserve(signed_letters.size());
  for (int v : signed_letters) {
    push_reduced(letters_, Letter::from_signed(v));
  }
}

Word Word::from_signed(std::span<int const> signed_letters) {
  std::vector<Letter> raw;
  raw.reserve(signed_letters.size());
  for (int v : signed_letters) {
    raw.push_back(Letter::from_signed(v));
  }
  return Word(std::move(raw));
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (Letter l : letters_) {
    m = std::max(m, l.generator());
  }
  return m;
}

Word reduce(std::span<Letter const> raw) {
  return Word(std::vector<Letter>(raw.begin(), raw.end()));
}

Word concat(Word const& u, Word const& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.reserve(u.size() + v.size());
  for (Letter l : v) {
    push_reduced(out, l);
  }
  return Word(std::move(out));
}

Word inverse(Word const& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word word_power(Word const& u, long k) {
  Word base = k < 0 ? inverse(u) : u;
  long count = k < 0 ? -k : k;
  std::vector<Letter> out;
  for (long i = 0; i < count; ++i) {
    for (Letter l : base) {
      push_reduced(out, l);
    }
  }
  return Word(std::move(out));
}

Word commutator(Word const& x, Word const& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

Word conjugate(Word const& x, Word const& y) {
  return concat(concat(y, x), inverse(y));
}

Word substitute(Word const& w, Substitution const& images) {
  std::vector<Letter> out;
  for (Letter l : w) {
    auto it = images.find(l.generator());
    if (it == images.end()) {
      throw DomainError("substitution has no image for generator " +
                        std::to_string(l.generator()));
    }
    if (l.sign() > 0) {
      for (Letter x : it->second) {
        push_reduced(out, x);
      }
    } else {
      auto const& img = it->second.letters();
      for (auto r = img.rbegin(); r != img.rend(); ++r) {
        push_reduced(out, r->inverse());
      }
    }
  }
  return Word(std::move(out));
}

long exponent_sum(Word const& w, int j) {
  long s = 0;
  for (Letter l : w) {
    if (l.generator() == j) {
      s += l.sign();
    }
  }
  return s;
}

Word cyclic_reduction(Word const& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
}

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 0) {
    throw RankError("negative rank");
  }
}

void FreeGroup::check(Word const& w) const {
  if (w.max_generator() > rank_) {
    throw RankError("word uses generator " + std::to_string(w.max_generator()) +
                    " in a free group of rank " + std::to_string(rank_));
  }
}

Word FreeGroup::reduce(std::span<Letter const> raw) const {
  for (Letter l : raw) {
    if (l.generator() > rank_) {
      throw RankError("letter index " + std::to_string(l.generator()) +
                      " exceeds rank " + std::to_string(rank_));
    }
  }
  return kdp::reduce(raw);
}

Word FreeGroup::generator(int j) const {
  if (j < 1 || j > rank_) {
    throw RankError("generator " + std::to_string(j) + " out of range");
  }
  return Word{j};
}

Word FreeGroup::mul(Word const& u, Word const& v) const {
  check(u);
  check(v);
  return concat(u, v);
}

Word FreeGroup::inv(Word const& u) const {
  check(u);
  return inverse(u);
}

Word FreeGroup::power(Word const& u, int k) const {
  check(u);
  return word_power(u, k);
}

Word FreeGroup::commutator(Word const& x, Word const& y) const {
  check(x);
  check(y);
  return kdp::commutator(x, y);
}

Word FreeGroup::conj(Word const& x, Word const& y) const {
  check(x);
  check(y);
  return conjugate(x, y);
}

Word FreeGroup::substitute(Word const& w, Substitution const& images) const {
  check(w);
  return kdp::substitute(w, images);
}

long FreeGroup::exponent_sum(Word const& w, int j) const {
  check(w);
  if (j < 1 || j > rank_) {
    throw RankError("generator " + std::to_string(j) + " out of range");
  }
  return kdp::exponent_sum(w, j);
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto const& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) ||
                       n[0] == '_')) {
      throw Error("invalid symbol name '" + n + "'");
    }
    if (!index_.emplace(n, static_cast<int>(i) + 1).second) {
      throw Error("duplicate symbol name '" + n + "'");
    }
  }
}

Alphabet Alphabet::standard(int rank) {
  if (rank == 2) {
    // Printing uses the aliases for rank 2.
    Alphabet a(std::vector<std::string>{"x", "y"});
    a.add_alias("e1", 1);
    a.add_alias("e2", 2);
    return a;
  }
  std::vector<std::string> names;
  for (int j = 1; j <= rank; ++j) {
    names.push_back("e" + std::to_string(j));
  }
  return Alphabet(std::move(names));
}

std::string const& Alphabet::name(int generator) const {
  if (generator < 1 || generator > size()) {
    throw RankError("no symbol for generator " + std::to_string(generator));
  }
  return names_[generator - 1];
}

int Alphabet::lookup(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? 0 : it->second;
}

void Alphabet::add_alias(std::string alias, int generator) {
  if (generator < 1 || generator > size()) {
    throw RankError("alias target out of range");
  }
  if (!index_.emplace(std::move(alias), generator).second) {
    throw Error("duplicate symbol name");
  }
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, Alphabet const& alphabet)
      : text_(text), alphabet_(alphabet) {}

  std::vector<Letter> parse_all() {
    auto letters = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return letters;
  }

 private:
  [[noreturn]] void fail(std::string const& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_term_start() {
    skip_space();
    if (pos_ >= text_.size()) {
      return false;
    }
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '1' || c == '_' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    while (at_term_start()) {
      auto term = parse_term();
      for (Letter l : term) {
        push_reduced(out, l);
      }
    }
    return out;
  }

  std::vector<Letter> parse_term() {
    auto atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        ++pos_;
      }
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      long k = 0;
      auto digits = text_.substr(start, pos_ - start);
      if (!digits.empty() && digits[0] == '+') {
        digits.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), k);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        pos_ = start;
        fail("expected integer exponent");
      }
      Word powered = word_power(Word(std::move(atom)), k);
      return {powered.begin(), powered.end()};
    }
    return atom;
  }

  std::vector<Letter> parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_sequence();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      auto x = parse_sequence();
      expect(',');
      auto y = parse_sequence();
      expect(']');
      Word comm = commutator(Word(std::move(x)), Word(std::move(y)));
      return {comm.begin(), comm.end()};
    }
    if (c == '1' && (pos_ + 1 >= text_.size() ||
                     !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    auto name = text_.substr(start, pos_ - start);
    int g = alphabet_.lookup(name);
    if (g == 0) {
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    return {Letter(g, 1)};
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string_view text_;
  Alphabet const& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  WordParser parser(text, alphabet);
  return Word(parser.parse_all());
}

std::string to_string(Word const& w, Alphabet const& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += alphabet.name(l.generator());
    if (l.sign() < 0) {
      out += "^-1";
    }
  }
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(l.signed_value()));
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace kdp
