#include "kdp/certificates.hpp"

#include <cstdio>

#include "kdp/error.hpp"
#include "kdp/kernel_groups.hpp"
#include "kdp/subgroup_metrics.hpp"

namespace kdp {

namespace {

using Json = nlohmann::ordered_json;

ProductElement pair(Word first, Word second) {
  ProductElement g;
  g.factors.push_back(std::move(first));
  g.factors.push_back(std::move(second));
  return g;
}

Word const kX{1};
Word const kY{2};

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Alphabet combine_alphabets(Alphabet const& a1, Alphabet const& a2,
                           Alphabet const& b) {
  std::vector<std::string> names;
  for (auto const* part : {&a1, &a2, &b}) {
    for (auto const& name : part->names()) {
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw DomainError("symbol '" + name + "' appears in two alphabets");
      }
      names.push_back(name);
    }
  }
  return Alphabet(std::move(names));
}

Word test_word(Word const& w, Word const& u, Word const& v, int n) {
  if (n < 1) {
    throw DomainError("test word needs n >= 1");
  }
  return commutator(w, word_power(concat(u, v), n));
}

ProductElement CubicAlphabet::eval(Word const& w) const {
  ProductGroup g(2, 2);
  auto out = g.identity();
  for (Letter l : w) {
    if (l.generator() > static_cast<int>(realizations.size())) {
      throw RankError("symbol outside the alphabet");
    }
    auto const& r = realizations[static_cast<std::size_t>(l.generator() - 1)];
    out = g.mul(out, l.sign() > 0 ? r : g.inv(r));
  }
  return out;
}

CubicAlphabet cubic_alphabet() {
  CubicAlphabet d;
  d.a1 = Alphabet({"xd", "y1", "y2"});
  d.a2 = Alphabet({"x1", "x2", "yd"});
  d.b = Alphabet({"b1", "b2", "b3"});
  d.combined = combine_alphabets(d.a1, d.a2, d.b);
  Word xi = inverse(kX);
  Word yi = inverse(kY);
  d.realizations = {
      pair(kX, xi), pair(kY, {}), pair({}, kY),               // A1
      pair(kX, {}), pair({}, kX), pair(kY, yi),               // A2
      pair(kX, xi), pair(kY, yi), pair(commutator(kX, kY), {})  // B
  };
  return d;
}

CubicWords cubic_words(int n) {
  if (n < 1) {
    throw DomainError("cubic_words needs n >= 1");
  }
  auto d = cubic_alphabet();
  auto sym = [&](char const* name) { return Word{d.combined.lookup(name)}; };
  CubicWords out;
  out.n = n;
  out.w = commutator(word_power(sym("xd"), n), word_power(sym("y1"), n));
  out.test_word = test_word(out.w, sym("y2"), sym("x2"), n);
  return out;
}

std::pair<Word, Word> substitution_split(Word const& w) {
  if (w.max_generator() > 3) {
    throw RankError("substitution_split takes words over b1, b2, b3");
  }
  Word first = substitute(w, {{1, kX}, {2, kY}, {3, commutator(kX, kY)}});
  Word second =
      substitute(w, {{1, inverse(kX)}, {2, inverse(kY)}, {3, Word{}}});
  return {std::move(first), std::move(second)};
}

bool substitution_identity_holds(Word const& w) {
  auto d = cubic_alphabet();
  // b1, b2, b3 are the last three combined symbols.
  Substitution shift{{1, Word{7}}, {2, Word{8}}, {3, Word{9}}};
  auto value = d.eval(substitute(w, shift));
  auto [first, second] = substitution_split(w);
  return value == pair(std::move(first), std::move(second));
}

int commutator_occurrences(Word const& w) {
  int count = 0;
  for (Letter l : w) {
    count += l.generator() == 3 ? 1 : 0;
  }
  return count;
}

NullExpression derive_null_expression(Word const& w, int n) {
  if (w.max_generator() > 3) {
    throw RankError("derive_null_expression takes words over b1, b2, b3");
  }
  auto d = cubic_alphabet();
  Substitution shift{{1, Word{7}}, {2, Word{8}}, {3, Word{9}}};
  if (!(d.eval(substitute(w, shift)) == h_family(n))) {
    throw DomainError("word does not evaluate to h(" + std::to_string(n) + ")");
  }
  NullExpression expr;
  std::vector<Letter> prefix;
  for (Letter l : w) {
    if (l.generator() == 3) {
      expr.push_back({Word(prefix), 0, l.sign()});
    } else {
      prefix.emplace_back(l.generator(), l.sign());
    }
  }
  auto p = commutator_presentation();
  if (!verify_null_expression(p, h_family(n).factors[0], expr)) {
    throw VerificationError("derive_null_expression",
                            "deletion expression does not verify");
  }
  return expr;
}

AmalgamScenario toy_scenario(int k) {
  if (k < 1) {
    throw DomainError("toy scenario needs k >= 1");
  }
  auto p = Presentation::parse(
      "< a, c, b, d, s | [a,c], [b,d], s c^-1 a, s d^-1 b >");
  ProductGroup g(2, 2);
  p.attach_evaluation(Evaluation(ProductEvaluation{
      g,
      {pair(kX, {}), pair(kX, kX), pair(kY, {}), pair(kY, kX),
       pair({}, kX)}}));
  AmalgamScenario sc{std::move(p), {}, k, {}, {}, {}, {}};
  auto const& alpha = sc.presentation.alphabet();
  auto sym = [&](char const* name) { return Word{alpha.lookup(name)}; };
  // Planar images: the first sees [a,c] only, the second [b,d] only.
  auto xy = concat(kX, kY);
  sc.projections = {
      {{kX, xy, Word{}, kY, kY}},  // a, c, b, d, s
      {{Word{}, kY, kX, xy, kY}},
  };
  sc.w = word_power(concat(inverse(sym("a")), sym("c")), k);
  sc.u = sym("a");
  sc.v = sym("b");
  sc.h = g.power(pair({}, kX), k);
  return sc;
}

void check_scenario(AmalgamScenario const& sc) {
  auto const& p = sc.presentation;
  auto const& alpha = p.alphabet();
  auto sym = [&](char const* name) { return Word{alpha.lookup(name)}; };
  auto fail = [](std::string const& what) {
    throw VerificationError("check_scenario", what);
  };
  if (!p.evaluation()) {
    fail("no evaluation attached");
  }
  // Edge relators identify s with a word over each vertex alphabet.
  if (!(p.relator(2) ==
            concat(sym("s"), inverse(concat(inverse(sym("a")), sym("c")))) &&
        p.relator(3) ==
            concat(sym("s"), inverse(concat(inverse(sym("b")), sym("d")))))) {
    fail("edge relators do not have the form s u_s^-1, s v_s^-1");
  }
  auto eval = [&](Word const& w) {
    return std::get<ProductElement>(p.evaluation()->evaluate(w));
  };
  // H = <(1, x)>: trivial first factor, a power of x in the second.
  auto in_h = [](ProductElement const& e) {
    return e[0].empty() && e[1].max_generator() <= 1;
  };
  for (char const* letter : {"a", "c", "b", "d"}) {
    if (in_h(eval(sym(letter)))) {
      fail(std::string("letter ") + letter + " evaluates into H");
    }
  }
  if (in_h(eval(sc.u)) || in_h(eval(sc.v))) {
    fail("u or v evaluates into H");
  }
  if (!(eval(sc.w) == sc.h) || !in_h(sc.h)) {
    fail("w does not evaluate to h in H");
  }
  ProductGroup g(2, 2);
  if (!g.commutator(eval(sc.u), sc.h).is_identity() ||
      !g.commutator(eval(sc.v), sc.h).is_identity()) {
    fail("h does not commute with u and v");
  }
  if (!projections_admissible(p, sc.projections)) {
    fail("planar projections are not admissible");
  }
}

ToyReport toy_amalgam_check(int k, int n, SearchBudget const& budget) {
  if (n < 1) {
    throw DomainError("toy check needs n >= 1");
  }
  auto sc = toy_scenario(k);
  check_scenario(sc);
  ToyReport r;
  r.k = k;
  r.n = n;
  r.word = test_word(sc.w, sc.u, sc.v, n);
  r.word_length = r.word.size();

  ProductGroup g(2, 2);
  GeneratingSet b(Alphabet({"s"}), {pair({}, kX)}, g);
  auto d = distance(b, sc.h, k + 1);
  if (!d.found || d.distance != k) {
    throw VerificationError("toy_amalgam_check", "d_B(1, s^k) is not k");
  }
  r.subgroup_distance = d.distance;
  r.bound = 2 * n * d.distance;

  SearchBudget sb = budget;
  if (!sb.plain && !sb.projections) {
    sb.projections = sc.projections;
  }
  r.area = area_search(sc.presentation, r.word, sb);
  r.bound_certified = r.area.lower_bound >= r.bound;
  if (r.area.status == AreaResult::Status::exact) {
    r.verdict = r.area.area >= r.bound ? ToyReport::Verdict::holds
                                       : ToyReport::Verdict::violated;
  }
  return r;
}

CertificateReport lower_bound_report(int n, CertifyBudget const& budget) {
  if (n < 1) {
    throw DomainError("certify needs n >= 1");
  }
  CertificateReport rep;
  rep.n = n;
  std::string tag = "n=" + std::to_string(n);
  auto add = [&](std::string verifier, std::string inputs, bool passed,
                 Json detail) {
    rep.evidence.push_back({std::move(verifier), fnv1a_hex(inputs), passed,
                            std::move(detail)});
    if (!passed) {
      throw VerificationError(rep.evidence.back().verifier,
                              "sub-verification failed for " + tag);
    }
  };

  // Test word and its hypotheses.
  auto d = cubic_alphabet();
  auto words = cubic_words(n);
  auto h = h_family(n);
  ProductGroup g(2, 2);
  auto eval_sym = [&](char const* name) {
    return d.eval(Word{d.combined.lookup(name)});
  };
  bool evaluates = d.eval(words.w) == h;
  bool commutes = g.commutator(h, eval_sym("y2")).is_identity() &&
                  g.commutator(h, eval_sym("x2")).is_identity();
  bool null = d.eval(words.test_word).is_identity();
  rep.test_word = to_string(words.test_word, d.combined);
  rep.computed_length = words.test_word.size();
  rep.stated_length = 16 * static_cast<std::size_t>(n);
  add("cubic_words", "cubic_words;" + tag, evaluates && commutes && null,
      Json{{"w", to_string(words.w, d.combined)},
           {"evaluates_to_h", evaluates},
           {"h_commutes_with_y2_x2", commutes},
           {"test_word_null_in_product", null},
           {"test_word_length", rep.computed_length}});

  // Area of [x^n, y^n] over < x, y | [x,y] >.
  auto p = commutator_presentation();
  auto area = area_search(p, h.factors[0], budget.search);
  bool exact = area.status == AreaResult::Status::exact;
  bool area_ok = !exact || (area.area == n * n &&
                            verify_null_expression(p, h.factors[0], area.witness));
  rep.conclusive = exact;
  rep.distance_lower_bound = exact ? area.area : area.lower_bound;
  add("area_search", "area_search;" + p.to_string() + ";" + tag + ";cap=" +
                         std::to_string(budget.search.node_cap) + ";c=" +
                         std::to_string(budget.search.length_cap_factor),
      area_ok,
      Json{{"word", p.format(h.factors[0])},
           {"status", exact ? "exact" : "exhausted"},
           {"area", exact ? area.area : area.lower_bound},
           {"witness_terms", area.witness.size()},
           {"cap_independent", area.cap_independent()},
           {"nodes", area.nodes}});

  // A concrete word over B for h_n and its deletion certificate.
  KernelGroup m(2, 2, 2);
  auto gens = standard_generators(m);
  for (int i = 0; i < 3; ++i) {
    if (!(gens.realization(i + 1) == d.realizations[static_cast<std::size_t>(6 + i)])) {
      throw VerificationError("lower_bound_report",
                              "standard generators of K2_2_2 differ from B");
    }
  }
  auto bword = rewrite_in_generators(m, h);
  auto expr = derive_null_expression(bword, n);
  int occurrences = commutator_occurrences(bword);
  bool deletion_ok = static_cast<int>(expr.size()) == occurrences &&
                     occurrences >= rep.distance_lower_bound &&
                     static_cast<int>(bword.size()) >= occurrences;
  add("deletion_certificate", "deletion_certificate;" + tag,
      deletion_ok,
      Json{{"b_word_length", bword.size()},
           {"b3_occurrences", occurrences},
           {"expression_area", expr.size()},
           {"verifies", true}});
  add("substitution_identity", "substitution_identity;" + tag,
      substitution_identity_holds(bword),
      Json{{"b_word_length", bword.size()}});

  // Direct search for d_B(1, h_n).
  auto dist = distance(gens, h, budget.radius);
  rep.distance_exact = dist.found;
  rep.distance_value = dist.distance;
  bool dist_ok = !dist.found || dist.distance >= rep.distance_lower_bound;
  Json dist_detail{{"radius", budget.radius},
                   {"status", dist.found ? "exact" : "greater_than"},
                   {"value", dist.found ? dist.distance : budget.radius},
                   {"visited", dist.visited}};
  add("subgroup_distance",
      "subgroup_distance;" + tag + ";radius=" + std::to_string(budget.radius),
      dist_ok, dist_detail);

  rep.area_lower_bound =
      2 * static_cast<std::int64_t>(n) * rep.distance_lower_bound;
  return rep;
}

}  // namespace kdp
