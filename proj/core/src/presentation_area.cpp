#include "kdp/presentation_area.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "kdp/error.hpp"

namespace kdp {

// ---------------------------------------------------------------------------
// Evaluation

Evaluation::Evaluation(AbelianEvaluation e) : impl_(std::move(e)) {
  auto const& a = std::get<AbelianEvaluation>(impl_);
  for (auto const& v : a.images) {
    if (v.size() != static_cast<std::size_t>(a.rank)) {
      throw RankError("abelian image has the wrong rank");
    }
  }
}

Evaluation::Evaluation(ProductEvaluation e) : impl_(std::move(e)) {
  auto const& p = std::get<ProductEvaluation>(impl_);
  for (auto const& g : p.images) {
    p.group.check(g);
  }
}

int Evaluation::source_rank() const {
  return std::visit(
      [](auto const& e) { return static_cast<int>(e.images.size()); }, impl_);
}

std::variant<AbelianVector, ProductElement> Evaluation::evaluate(
    Word const& w) const {
  if (w.max_generator() > source_rank()) {
    throw RankError("word uses a generator outside the evaluation");
  }
  if (auto const* a = std::get_if<AbelianEvaluation>(&impl_)) {
    AbelianVector v(static_cast<std::size_t>(a->rank));
    for (Letter l : w) {
      v.add_scaled(a->images[l.generator() - 1], l.sign());
    }
    return v;
  }
  auto const& p = std::get<ProductEvaluation>(impl_);
  std::vector<std::vector<Letter>> acc(static_cast<std::size_t>(p.group.factors()));
  for (Letter l : w) {
    auto const& img = p.images[l.generator() - 1];
    for (std::size_t i = 0; i < acc.size(); ++i) {
      auto piece = l.sign() > 0 ? img[i] : inverse(img[i]);
      for (Letter x : piece) {
        if (!acc[i].empty() && acc[i].back().cancels(x)) {
          acc[i].pop_back();
        } else {
          acc[i].push_back(x);
        }
      }
    }
  }
  ProductElement out;
  for (auto& letters : acc) {
    out.factors.emplace_back(std::move(letters));
  }
  return out;
}

bool Evaluation::is_identity(Word const& w) const {
  auto v = evaluate(w);
  if (auto const* a = std::get_if<AbelianVector>(&v)) {
    return a->is_zero();
  }
  return std::get<ProductElement>(v).is_identity();
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  FreeGroup f(alphabet_.size());
  for (auto const& r : relators_) {
    if (r.empty()) {
      throw DomainError("relator reduces to the empty word");
    }
    f.check(r);
  }
}

namespace {

// 1-based line and column of a byte offset.
std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t offset_of(std::string_view text, int line, int col) {
  std::size_t i = 0;
  for (int l = 1; l < line && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++l;
    }
  }
  return i + static_cast<std::size_t>(col - 1);
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset,
                          std::string const& message) {
  auto [line, col] = line_col(text, offset);
  throw ParseError(message, line, col);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits text[begin, end) on commas outside brackets; returns offsets.
std::vector<std::pair<std::size_t, std::size_t>> split_top_level(
    std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (c == '[' || c == '(') {
      ++depth;
    } else if (c == ']' || c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  out.emplace_back(start, end);
  return out;
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  auto open = text.find('<');
  if (open == std::string_view::npos ||
      !trim(text.substr(0, open)).empty()) {
    fail_at(text, text.find_first_not_of(" \t\r\n"), "expected '<'");
  }
  auto bar = text.find('|', open);
  if (bar == std::string_view::npos) {
    fail_at(text, text.size(), "expected '|'");
  }
  auto close = text.rfind('>');
  if (close == std::string_view::npos || close < bar) {
    fail_at(text, text.size(), "expected '>'");
  }
  if (!trim(text.substr(close + 1)).empty()) {
    fail_at(text, close + 1, "trailing input after '>'");
  }

  std::vector<std::string> names;
  for (auto [b, e] : split_top_level(text, open + 1, bar)) {
    auto name = trim(text.substr(b, e - b));
    if (name.empty()) {
      if (e == bar && names.empty() && trim(text.substr(open + 1, bar - open - 1)).empty()) {
        break;
      }
      fail_at(text, b, "expected generator name");
    }
    bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
    for (char c : name) {
      ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    }
    if (!ok || name == "1") {
      fail_at(text, static_cast<std::size_t>(name.data() - text.data()),
              "invalid generator name '" + std::string(name) + "'");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      fail_at(text, static_cast<std::size_t>(name.data() - text.data()),
              "duplicate generator '" + std::string(name) + "'");
    }
    names.emplace_back(name);
  }
  Alphabet alphabet(std::move(names));

  std::vector<Word> relators;
  if (!trim(text.substr(bar + 1, close - bar - 1)).empty()) {
    for (auto [b, e] : split_top_level(text, bar + 1, close)) {
      auto piece = text.substr(b, e - b);
      if (trim(piece).empty()) {
        fail_at(text, b, "empty relator");
      }
      Word r;
      try {
        r = kdp::parse_word(piece, alphabet);
      } catch (ParseError const& err) {
        fail_at(text, b + offset_of(piece, err.line(), err.column()),
                err.message());
      }
      if (r.empty()) {
        fail_at(text, b, "relator reduces to the empty word");
      }
      relators.push_back(std::move(r));
    }
  }
  return Presentation(std::move(alphabet), std::move(relators));
}

Word const& Presentation::relator(int index) const {
  if (index < 0 || index >= static_cast<int>(relators_.size())) {
    throw DomainError("relator index " + std::to_string(index) +
                      " out of range");
  }
  return relators_[static_cast<std::size_t>(index)];
}

std::size_t Presentation::max_relator_length() const {
  std::size_t best = 0;
  for (auto const& r : relators_) {
    best = std::max(best, r.size());
  }
  return best;
}

void Presentation::attach_evaluation(Evaluation e) {
  if (e.source_rank() != rank()) {
    throw RankError("evaluation has " + std::to_string(e.source_rank()) +
                    " generator images, presentation has " +
                    std::to_string(rank()));
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (!e.is_identity(relators_[i])) {
      throw VerificationError("Presentation",
                              "relator " + std::to_string(i) +
                                  " does not evaluate to the identity");
    }
  }
  evaluation_ = std::move(e);
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (int g = 1; g <= rank(); ++g) {
    out += (g > 1 ? ", " : "") + alphabet_.name(g);
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += (i > 0 ? ", " : "") + format(relators_[i]);
  }
  return out + " >";
}

Presentation commutator_presentation() {
  Alphabet a(std::vector<std::string>{"x", "y"});
  Presentation p(a, {commutator(Word{1}, Word{2})});
  p.attach_evaluation(Evaluation(AbelianEvaluation{
      2, {AbelianVector::unit(2, 0), AbelianVector::unit(2, 1)}}));
  return p;
}

bool is_null_homotopic(Presentation const& p, Word const& w) {
  if (!p.evaluation()) {
    throw DomainError("presentation has no evaluation attached");
  }
  p.alphabet().group().check(w);
  return p.evaluation()->is_identity(w);
}

// ---------------------------------------------------------------------------
// Null expressions

Word expression_product(Presentation const& p, NullExpression const& expr) {
  std::vector<Letter> acc;
  auto push = [&](Word const& w) {
    for (Letter l : w) {
      if (!acc.empty() && acc.back().cancels(l)) {
        acc.pop_back();
      } else {
        acc.push_back(l);
      }
    }
  };
  FreeGroup f(p.rank());
  for (auto const& t : expr) {
    if (t.sign != 1 && t.sign != -1) {
      throw DomainError("null expression sign must be +1 or -1");
    }
    auto const& r = p.relator(t.relator);
    f.check(t.conjugator);
    push(t.conjugator);
    push(t.sign > 0 ? r : inverse(r));
    push(inverse(t.conjugator));
  }
  return Word(std::move(acc));
}

bool verify_null_expression(Presentation const& p, Word const& w,
                            NullExpression const& expr) {
  return expression_product(p, expr) == w;
}

// ---------------------------------------------------------------------------
// Projections

std::int64_t signed_area(Word const& w) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t area = 0;
  for (Letter l : w) {
    if (l.generator() == 1) {
      x += l.sign();
    } else if (l.generator() == 2) {
      area += x * l.sign();
      y += l.sign();
    } else {
      throw RankError("signed_area takes words in x, y");
    }
  }
  if (x != 0 || y != 0) {
    throw DomainError("signed_area of a word that is not a closed loop");
  }
  return area;
}

namespace {

bool closed(Word const& w) {
  return exponent_sum(w, 1) == 0 && exponent_sum(w, 2) == 0;
}

Word project(AreaProjection const& p, Word const& w) {
  Substitution s;
  for (std::size_t g = 0; g < p.images.size(); ++g) {
    s[static_cast<int>(g) + 1] = p.images[g];
  }
  return substitute(w, s);
}

}  // namespace

bool projections_admissible(Presentation const& p,
                            std::vector<AreaProjection> const& projections) {
  for (auto const& pr : projections) {
    if (pr.images.size() != static_cast<std::size_t>(p.rank())) {
      return false;
    }
    for (auto const& img : pr.images) {
      if (img.max_generator() > 2) {
        return false;
      }
    }
  }
  for (auto const& r : p.relators()) {
    std::int64_t total = 0;
    for (auto const& pr : projections) {
      auto img = project(pr, r);
      if (!closed(img)) {
        return false;
      }
      total += std::abs(signed_area(img));
    }
    if (total > 1) {
      return false;
    }
  }
  return true;
}

std::vector<AreaProjection> detect_projections(Presentation const& p) {
  std::vector<AreaProjection> chosen;
  for (int a = 1; a <= p.rank(); ++a) {
    for (int b = a + 1; b <= p.rank(); ++b) {
      AreaProjection pr{std::vector<Word>(static_cast<std::size_t>(p.rank()))};
      pr.images[a - 1] = Word{1};
      pr.images[b - 1] = Word{2};
      auto trial = chosen;
      trial.push_back(pr);
      if (projections_admissible(p, trial)) {
        chosen = std::move(trial);
      }
    }
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Area search

namespace {

// One signed char per letter.
using Key = std::string;

signed char at(Key const& k, std::size_t i) {
  return static_cast<signed char>(k[i]);
}

Key to_key(Word const& w) {
  Key k;
  k.reserve(w.size());
  for (Letter l : w) {
    k.push_back(static_cast<char>(l.signed_value()));
  }
  return k;
}

Word from_key(Key const& k) {
  std::vector<Letter> letters;
  letters.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    letters.push_back(Letter::from_signed(at(k, i)));
  }
  return Word(std::move(letters));
}

Key inverse_key(Key const& k) {
  Key out(k.rbegin(), k.rend());
  for (auto& c : out) {
    c = static_cast<char>(-static_cast<signed char>(c));
  }
  return out;
}

// Start of the lexicographically least rotation (two-pointer method).
std::size_t least_rotation(Key const& s) {
  std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    auto a = at(s, (i + k) % n);
    auto b = at(s, (j + k) % n);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

Key rotate(Key const& s, std::size_t r) {
  return s.substr(r) + s.substr(0, r);
}

// raw = t c^e t^-1 with c the least rotation of the cyclic reduction of raw
// or of its inverse.
struct Canonical {
  Key word;
  Key conjugator;
  int orientation;
};

Canonical canonical(Key const& raw) {
  std::size_t strip = 0;
  while (2 * strip + 1 < raw.size() &&
         at(raw, strip) == -at(raw, raw.size() - 1 - strip)) {
    ++strip;
  }
  Key core = raw.substr(strip, raw.size() - 2 * strip);
  Key t = raw.substr(0, strip);
  if (core.empty()) {
    return {Key(), t, 1};
  }
  Key inv = inverse_key(core);
  auto rf = least_rotation(core);
  auto ri = least_rotation(inv);
  Key cf = rotate(core, rf);
  Key ci = rotate(inv, ri);
  // core = p c p^-1 with p = core[0, rf); for the inverse, core^-1 = q c' q^-1.
  if (cf <= ci) {
    return {std::move(cf), t + core.substr(0, rf), 1};
  }
  return {std::move(ci), t + inv.substr(0, ri), -1};
}

void push_letter(Key& out, char c) {
  if (!out.empty() && static_cast<signed char>(out.back()) ==
                          -static_cast<signed char>(c)) {
    out.pop_back();
  } else {
    out.push_back(c);
  }
}

void insert_reduced(Key const& u, std::size_t pos, Key const& rho, Key& out) {
  out.assign(u, 0, pos);
  for (char c : rho) {
    push_letter(out, c);
  }
  for (std::size_t i = pos; i < u.size(); ++i) {
    push_letter(out, u[i]);
  }
}

struct Insertion {
  Key word;  // cyclic permutation of relator^sign
  int relator;
  int sign;
  int rotation;  // word = R[rotation:] R[:rotation], R = relator^sign
  std::vector<std::int64_t> areas;  // projected signed area per projection
};

std::vector<Insertion> insertions(Presentation const& p,
                                  std::vector<AreaProjection> const& proj) {
  std::vector<Insertion> out;
  std::set<Key> seen;
  for (int i = 0; i < static_cast<int>(p.relators().size()); ++i) {
    for (int sign : {1, -1}) {
      Word r = sign > 0 ? p.relators()[static_cast<std::size_t>(i)]
                        : inverse(p.relators()[static_cast<std::size_t>(i)]);
      std::vector<std::int64_t> areas;
      for (auto const& pr : proj) {
        areas.push_back(signed_area(project(pr, r)));
      }
      Key rk = to_key(r);
      for (std::size_t t = 0; t < rk.size(); ++t) {
        Key rot = rotate(rk, t);
        if (seen.insert(rot).second) {
          out.push_back({rot, i, sign, static_cast<int>(t), areas});
        }
      }
    }
  }
  return out;
}

struct Node {
  Key const* word;  // canonical cyclic word
  std::uint32_t parent;
  std::int32_t g;
  std::int32_t h;
  std::uint32_t insertion;
  std::uint32_t position;
  bool closed;
};

constexpr std::uint32_t kNone = 0xffffffffu;

Word key_word(Key const& k) { return from_key(k); }

// Replays the path with the actual words. Invariant: the current word U is
// freely equal to X c^e X^-1 for the node's canonical word c, and the input
// equals (terms so far) * U.
NullExpression reconstruct(Presentation const& p, std::vector<Node> const& nodes,
                           std::vector<Insertion> const& ins, Word const& start,
                           std::uint32_t goal) {
  std::vector<std::uint32_t> path;
  for (std::uint32_t v = goal; nodes[v].parent != kNone; v = nodes[v].parent) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());

  auto c0 = canonical(to_key(start));
  Word x = key_word(c0.conjugator);
  int e = c0.orientation;
  NullExpression expr;
  for (auto v : path) {
    auto const& node = nodes[v];
    auto const& move = ins[node.insertion];
    Key const& parent = *nodes[node.parent].word;
    Word r = move.sign > 0 ? p.relator(move.relator)
                           : inverse(p.relator(move.relator));
    // raw = C c with C = (alpha rho1^-1) r^sign (alpha rho1^-1)^-1.
    Word alpha = key_word(parent.substr(0, node.position));
    Word rho1(std::vector<Letter>(r.begin(), r.begin() + move.rotation));
    Word local = concat(alpha, inverse(rho1));
    Key raw;
    insert_reduced(parent, node.position, move.word, raw);
    auto next = canonical(raw);
    Word t = key_word(next.conjugator);
    if (e > 0) {
      // U = X c X^-1 = (X C X^-1)^-1 (X raw X^-1).
      expr.push_back({concat(x, local), move.relator, -move.sign});
      x = concat(x, t);
      e = next.orientation;
    } else {
      // U = X c^-1 X^-1 = V (X C X^-1) V^-1 V with V = X raw^-1 X^-1.
      Word v_word = conjugate(inverse(key_word(raw)), x);
      expr.push_back({concat(v_word, concat(x, local)), move.relator,
                      move.sign});
      x = concat(x, t);
      e = -next.orientation;
    }
  }
  return expr;
}

}  // namespace

AreaResult area_search(Presentation const& p, Word const& w,
                       SearchBudget const& budget) {
  p.alphabet().group().check(w);
  if (p.rank() > 127) {
    throw RankError("area_search supports at most 127 generators");
  }
  if (p.evaluation() && !p.evaluation()->is_identity(w)) {
    throw DomainError("word is not null-homotopic");
  }
  if (budget.node_cap <= 0 || budget.length_cap_factor < 0) {
    throw DomainError("search budget must be positive");
  }
  std::vector<AreaProjection> proj;
  if (!budget.plain) {
    proj = budget.projections ? *budget.projections : detect_projections(p);
    if (!projections_admissible(p, proj)) {
      throw DomainError("area projections are not admissible");
    }
  }
  auto start = canonical(to_key(w));
  std::vector<std::int64_t> start_areas;
  std::int64_t h0 = 0;
  for (auto const& pr : proj) {
    auto img = project(pr, key_word(start.word));
    if (!closed(img)) {
      throw DomainError("word is not null-homotopic (projection is not closed)");
    }
    start_areas.push_back(signed_area(img));
    h0 += std::abs(start_areas.back());
  }

  AreaResult result;
  result.start_bound = static_cast<int>(h0);
  result.lower_bound = static_cast<int>(h0);
  result.length_cap =
      w.size() + static_cast<std::size_t>(budget.length_cap_factor) *
                     p.max_relator_length();
  if (start.word.empty()) {
    result.status = AreaResult::Status::exact;
    result.nodes = 1;
    return result;
  }
  if (p.relators().empty()) {
    return result;
  }

  auto const ins = insertions(p, proj);
  // A minimal diagram always has a cell with an edge on the boundary, and
  // peeling that cell is an insertion whose first letter cancels the letter
  // just before it. Other insertions are never needed.
  auto slot = [&](signed char c) {
    return static_cast<std::size_t>(c + p.rank());
  };
  std::vector<std::vector<std::uint32_t>> starting_with(
      static_cast<std::size_t>(2 * p.rank() + 1));
  for (std::uint32_t k = 0; k < ins.size(); ++k) {
    starting_with[slot(at(ins[k].word, 0))].push_back(k);
  }

  std::size_t const np = proj.size();
  std::unordered_map<Key, std::uint32_t> index;
  std::vector<Node> nodes;
  std::vector<std::int64_t> areas;  // np per node, for the canonical word

  // Ordered by f, then by remaining bound h, then by word length; among
  // equals the most recent entry first.
  using Entry = std::tuple<std::int32_t, std::int32_t, std::uint32_t,
                           std::uint32_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::uint32_t pushes = 0;
  auto push_open = [&](std::uint32_t v) {
    auto const& node = nodes[v];
    open.emplace(node.g + node.h, node.h,
                 static_cast<std::uint32_t>(node.word->size()), ~pushes++, v);
  };

  {
    auto [it, _] = index.emplace(start.word, 0);
    nodes.push_back({&it->first, kNone, 0, static_cast<std::int32_t>(h0), 0, 0,
                     false});
    areas.insert(areas.end(), start_areas.begin(), start_areas.end());
    push_open(0);
  }

  auto finish_exact = [&](std::uint32_t goal) {
    result.status = AreaResult::Status::exact;
    result.area = nodes[goal].g;
    result.lower_bound = result.area;
    result.witness = reconstruct(p, nodes, ins, w, goal);
    result.nodes = static_cast<std::int64_t>(nodes.size());
    if (!verify_null_expression(p, w, result.witness) ||
        static_cast<int>(result.witness.size()) != result.area) {
      throw VerificationError("area_search", "witness does not verify");
    }
    return result;
  };

  Key raw;
  std::vector<std::int64_t> child_areas(np);
  while (!open.empty()) {
    auto [f, h_entry, len, seq, v] = open.top();
    open.pop();
    (void)h_entry;
    (void)len;
    (void)seq;
    if (nodes[v].closed || nodes[v].g + nodes[v].h != f) {
      continue;
    }
    if (!result.length_pruned) {
      result.lower_bound = f;
    }
    nodes[v].closed = true;
    Key const& u = *nodes[v].word;
    if (u.empty()) {
      return finish_exact(v);
    }
    auto g1 = nodes[v].g + 1;
    for (std::size_t pos = 1; pos <= u.size(); ++pos) {
      for (std::uint32_t k : starting_with[slot(static_cast<signed char>(
               -at(u, pos - 1)))]) {
        auto const& move = ins[k];
        insert_reduced(u, pos, move.word, raw);
        auto child = canonical(raw);
        if (child.word.size() > result.length_cap) {
          result.length_pruned = true;
          continue;
        }
        auto it = index.find(child.word);
        if (it != index.end()) {
          auto& existing = nodes[it->second];
          if (!existing.closed && g1 < existing.g) {
            existing.g = g1;
            existing.parent = v;
            existing.insertion = k;
            existing.position = static_cast<std::uint32_t>(pos);
            push_open(it->second);
          }
          continue;
        }
        if (static_cast<std::int64_t>(nodes.size()) >= budget.node_cap) {
          result.nodes = static_cast<std::int64_t>(nodes.size());
          return result;
        }
        std::int64_t h = 0;
        for (std::size_t q = 0; q < np; ++q) {
          child_areas[q] =
              child.orientation * (areas[v * np + q] + move.areas[q]);
          h += std::abs(child_areas[q]);
        }
        auto id = static_cast<std::uint32_t>(nodes.size());
        bool goal = child.word.empty();
        auto [entry, _] = index.emplace(std::move(child.word), id);
        nodes.push_back({&entry->first, v, g1, static_cast<std::int32_t>(h), k,
                         static_cast<std::uint32_t>(pos), false});
        areas.insert(areas.end(), child_areas.begin(), child_areas.end());
        if (goal && g1 == f) {
          return finish_exact(id);
        }
        push_open(id);
      }
    }
  }
  // Every word inside the cap was settled without reaching the goal.
  result.nodes = static_cast<std::int64_t>(nodes.size());
  return result;
}

// ---------------------------------------------------------------------------
// Dehn function

namespace {

// Least representative of the cyclic permutations of w and its inverse.
std::vector<int> canonical_cyclic(std::vector<int> const& w) {
  std::vector<int> best = w;
  std::vector<int> inv(w.rbegin(), w.rend());
  for (auto& x : inv) {
    x = -x;
  }
  std::vector<int> const* bases[] = {&w, &inv};
  for (auto const* base : bases) {
    for (std::size_t t = 0; t < base->size(); ++t) {
      std::vector<int> rot(base->begin() + static_cast<long>(t), base->end());
      rot.insert(rot.end(), base->begin(), base->begin() + static_cast<long>(t));
      best = std::min(best, rot);
    }
  }
  return best;
}

void enumerate(int rank, int n, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (!cur.empty()) {
    // Cyclically reduced and canonical only.
    if (cur.front() != -cur.back() && canonical_cyclic(cur) == cur) {
      out.push_back(cur);
    }
  }
  if (static_cast<int>(cur.size()) == n) {
    return;
  }
  for (int g = 1; g <= rank; ++g) {
    for (int s : {g, -g}) {
      if (!cur.empty() && cur.back() == -s) {
        continue;
      }
      cur.push_back(s);
      enumerate(rank, n, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

DehnResult dehn_function(Presentation const& p, int n,
                         SearchBudget const& budget, int jobs) {
  if (!p.evaluation()) {
    throw DomainError("presentation has no evaluation attached");
  }
  if (n < 0) {
    throw DomainError("n must be non-negative");
  }
  DehnResult result;
  result.n = n;
  std::vector<std::vector<int>> candidates;
  std::vector<int> cur;
  enumerate(p.rank(), n, cur, candidates);
  std::vector<Word> words;
  for (auto const& c : candidates) {
    Word w = Word::from_signed(c);
    if (p.evaluation()->is_identity(w)) {
      words.push_back(std::move(w));
    }
  }
  result.words_checked = static_cast<std::int64_t>(words.size());

  std::vector<AreaResult> areas(words.size());
  jobs = std::max(1, jobs);
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < words.size();
         i += static_cast<std::size_t>(jobs)) {
      areas[i] = area_search(p, words[i], budget);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back(work, static_cast<std::size_t>(j));
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto const& a = areas[i];
    int value = a.status == AreaResult::Status::exact ? a.area : a.lower_bound;
    if (a.status != AreaResult::Status::exact) {
      result.exact = false;
    }
    if (value > result.value) {
      result.value = value;
      result.witness = words[i];
    }
  }
  return result;
}

}  // namespace kdp
