#include "kdp/kernel_groups.hpp"

#include <charconv>
#include <random>

#include "kdp/error.hpp"

namespace kdp {

KernelGroup::KernelGroup(int n, int m, int r)
    : KernelGroup(n, m, r,
                  std::vector<FactorHom>(n < 0 ? 0 : n,
                                         FactorHom::standard(m, r))) {}

KernelGroup::KernelGroup(int n, int m, int r, std::vector<FactorHom> maps)
    : n_(n), m_(m), r_(r), ambient_(n, m), maps_(std::move(maps)) {
  if (n < 1 || m < 1 || r < 0 || r > m) {
    throw DomainError("K^n_m(r) needs n >= 1, m >= 1 and 0 <= r <= m");
  }
  if (maps_.size() != static_cast<std::size_t>(n)) {
    throw RankError("expected one factor map per factor");
  }
  for (auto const& h : maps_) {
    if (h.rank() != m || h.target_rank() != r) {
      throw RankError("factor map has the wrong shape");
    }
    if (!is_surjective(h)) {
      throw DomainError("factor map is not surjective onto Z^" +
                        std::to_string(r));
    }
  }
}

KernelGroup KernelGroup::parse(std::string_view name) {
  auto fail = [&] {
    throw ParseError("expected a group name like K3_2_2", 1, 1);
  };
  if (name.empty() || name[0] != 'K') {
    fail();
  }
  int values[3] = {0, 0, 0};
  std::size_t pos = 1;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) {
      if (pos >= name.size() || name[pos] != '_') {
        fail();
      }
      ++pos;
    }
    auto [ptr, ec] =
        std::from_chars(name.data() + pos, name.data() + name.size(), values[k]);
    if (ec != std::errc()) {
      fail();
    }
    pos = static_cast<std::size_t>(ptr - name.data());
  }
  if (pos != name.size()) {
    fail();
  }
  return KernelGroup(values[0], values[1], values[2]);
}

std::string KernelGroup::name() const {
  return "K" + std::to_string(n_) + "_" + std::to_string(m_) + "_" +
         std::to_string(r_);
}

bool KernelGroup::is_standard() const {
  for (auto const& h : maps_) {
    if (!h.is_standard()) {
      return false;
    }
  }
  return true;
}

AbelianVector KernelGroup::theta(ProductElement const& g) const {
  ambient_.check(g);
  AbelianVector total(static_cast<std::size_t>(r_));
  for (std::size_t i = 0; i < g.size(); ++i) {
    total += ab_image(maps_[i], g[i]);
  }
  return total;
}

bool KernelGroup::contains(ProductElement const& g) const {
  return theta(g).is_zero();
}

GeneratingSet::GeneratingSet(Alphabet symbols,
                             std::vector<ProductElement> realizations,
                             ProductGroup group)
    : symbols_(std::move(symbols)),
      realizations_(std::move(realizations)),
      group_(group) {
  if (realizations_.size() != static_cast<std::size_t>(symbols_.size())) {
    throw RankError("one realization per symbol required");
  }
  for (auto const& g : realizations_) {
    group_.check(g);
  }
}

ProductElement const& GeneratingSet::realization(int symbol) const {
  if (symbol < 1 || symbol > size()) {
    throw DomainError("unknown generator symbol " + std::to_string(symbol));
  }
  return realizations_[symbol - 1];
}

ProductElement GeneratingSet::eval(GenWord const& w) const {
  if (w.max_generator() > size()) {
    throw DomainError("word uses a symbol outside the generating set");
  }
  std::vector<std::vector<Letter>> acc(group_.factors());
  for (Letter l : w) {
    auto const& g = realizations_[l.generator() - 1];
    for (std::size_t f = 0; f < acc.size(); ++f) {
      auto const& letters = g[f].letters();
      auto push = [&](Letter x) {
        if (!acc[f].empty() && acc[f].back().cancels(x)) {
          acc[f].pop_back();
        } else {
          acc[f].push_back(x);
        }
      };
      if (l.sign() > 0) {
        for (Letter x : letters) {
          push(x);
        }
      } else {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
          push(it->inverse());
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

StandardGenerators::StandardGenerators(
    GeneratingSet set, std::map<std::tuple<Family, int, int>, int> index)
    : GeneratingSet(std::move(set)), index_(std::move(index)) {}

int StandardGenerators::symbol(Family f, int i, int j) const {
  auto it = index_.find({f, i, j});
  if (it == index_.end()) {
    throw DomainError("no such standard generator");
  }
  return it->second;
}

std::size_t StandardGenerators::count(Family f) const {
  std::size_t c = 0;
  for (auto const& [key, sym] : index_) {
    c += std::get<0>(key) == f ? 1 : 0;
  }
  return c;
}

namespace {

using Family = StandardGenerators::Family;

std::vector<BasisChange> basis_changes(KernelGroup const& g) {
  std::vector<BasisChange> out;
  for (auto const& h : g.maps()) {
    out.push_back(normalize_basis(h));
  }
  return out;
}

ProductElement transport(ProductElement const& e,
                         std::vector<BasisChange> const& changes,
                         bool inverse_direction) {
  ProductElement out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.factors.push_back(substitute(
        e[i], inverse_direction ? changes[i].inverse_substitution()
                                : changes[i].as_substitution()));
  }
  return out;
}

// Conjugator C and sign s with [p, q] = C [a, b]^s C^-1 where a, b are the
// positive letters underlying p, q.
std::pair<Word, int> commutator_of_letters(Letter p, Letter q) {
  Letter a(p.generator(), 1);
  Letter b(q.generator(), 1);
  if (p.sign() > 0 && q.sign() > 0) {
    return {Word{}, 1};
  }
  if (p.sign() < 0 && q.sign() > 0) {
    return {Word(std::vector<Letter>{a.inverse()}), -1};
  }
  if (p.sign() > 0 && q.sign() < 0) {
    return {Word(std::vector<Letter>{b.inverse()}), -1};
  }
  return {Word(std::vector<Letter>{a.inverse(), b.inverse()}), 1};
}

}  // namespace

StandardGenerators standard_generators(KernelGroup const& g) {
  if (g.n() < 2) {
    throw DomainError("standard generators need n >= 2");
  }
  ProductGroup const& amb = g.ambient();
  std::vector<std::string> names;
  std::vector<ProductElement> reals;
  std::map<std::tuple<Family, int, int>, int> index;
  auto add = [&](Family f, int i, int j, std::string name, ProductElement e) {
    names.push_back(std::move(name));
    reals.push_back(std::move(e));
    index.emplace(std::make_tuple(f, i, j), static_cast<int>(names.size()));
  };
  for (int i = 1; i <= g.r(); ++i) {
    for (int j = 2; j <= g.n(); ++j) {
      auto e = amb.identity();
      e.factors[0] = Word{i};
      e.factors[j - 1] = Word{-i};
      add(Family::s1, i, j,
          "u" + std::to_string(i) + "_" + std::to_string(j), std::move(e));
    }
  }
  for (int i = g.r() + 1; i <= g.m(); ++i) {
    for (int j = 1; j <= g.n(); ++j) {
      add(Family::s2, i, j,
          "e" + std::to_string(i) + "_" + std::to_string(j),
          amb.embed(j - 1, Word{i}));
    }
  }
  for (int i = 1; i <= g.r(); ++i) {
    for (int j = i + 1; j <= g.r(); ++j) {
      add(Family::s3, i, j,
          "c" + std::to_string(i) + "_" + std::to_string(j),
          amb.embed(0, commutator(Word{i}, Word{j})));
    }
  }
  if (!g.is_standard()) {
    auto changes = basis_changes(g);
    for (auto& e : reals) {
      e = transport(e, changes, false);
    }
  }
  for (auto const& e : reals) {
    if (!g.contains(e)) {
      throw VerificationError("standard_generators",
                              "generator realization outside the kernel");
    }
  }
  return StandardGenerators(
      GeneratingSet(Alphabet(std::move(names)), std::move(reals), amb),
      std::move(index));
}

std::vector<ConjugatedGenerator> collect_kernel_word(Word const& w, int r) {
  std::vector<ConjugatedGenerator> out;

  // Peel the generators e_k, k > r, as conjugates by the running prefix.
  std::vector<Letter> rest;
  for (Letter l : w) {
    if (l.generator() > r) {
      out.push_back({Word(rest), false, l.generator(), 0, l.sign()});
    } else if (!rest.empty() && rest.back().cancels(l)) {
      rest.pop_back();
    } else {
      rest.push_back(l);
    }
  }
  for (int j = 1; j <= r; ++j) {
    if (exponent_sum(Word(rest), j) != 0) {
      throw DomainError("word is not in the kernel: exponent sum of e" +
                        std::to_string(j) + " is nonzero");
    }
  }

  // Sort by adjacent transpositions x y = y x [x^-1, y^-1]; each swap emits
  // the commutator conjugated by the new prefix p y x.
  while (true) {
    std::size_t t = 0;
    while (t + 1 < rest.size() &&
           rest[t].generator() <= rest[t + 1].generator()) {
      ++t;
    }
    if (t + 1 >= rest.size()) {
      break;
    }
    Letter x = rest[t];
    Letter y = rest[t + 1];
    std::vector<Letter> prefix(rest.begin(), rest.begin() + t);
    prefix.push_back(y);
    prefix.push_back(x);
    Word p(prefix);

    auto [inner, sign] = commutator_of_letters(x.inverse(), y.inverse());
    int a = x.generator();
    int b = y.generator();
    // [a, b] with a > b is c_{b,a}^-1.
    out.push_back({concat(p, inner), true, b, a, -sign});

    std::swap(rest[t], rest[t + 1]);
    Word reduced(std::move(rest));
    rest.assign(reduced.begin(), reduced.end());
  }
  if (!rest.empty()) {
    throw VerificationError("collect_kernel_word",
                            "sorted remainder did not cancel");
  }
  return out;
}

Word expand(std::vector<ConjugatedGenerator> const& terms) {
  Word total;
  for (auto const& t : terms) {
    Word core = t.commutator ? commutator(Word{t.i}, Word{t.j}) : Word{t.i};
    total = concat(total, conjugate(word_power(core, t.sign), t.conjugator));
  }
  return total;
}

namespace {

GenWord rewrite_standard(KernelGroup const& g, StandardGenerators const& gens,
                         ProductElement const& element) {
  ProductGroup const& amb = g.ambient();

  // Stage 1: lift factors 2..n over S1 and S2'.
  std::vector<Letter> lift;
  for (int j = 2; j <= g.n(); ++j) {
    for (Letter l : element[j - 1]) {
      int i = l.generator();
      if (i <= g.r()) {
        lift.emplace_back(gens.symbol(Family::s1, i, j), -l.sign());
      } else {
        lift.emplace_back(gens.symbol(Family::s2, i, j), l.sign());
      }
    }
  }
  GenWord lift_word(std::move(lift));
  ProductElement residual = amb.mul(element, amb.inv(gens.eval(lift_word)));
  for (int j = 2; j <= g.n(); ++j) {
    if (!residual[j - 1].empty()) {
      throw VerificationError("rewrite_in_generators", "lift mismatch");
    }
  }

  // Stage 2: the first-factor residual as conjugates of S2'' and S3.
  auto terms = collect_kernel_word(residual[0], g.r());

  // Stage 3: conjugators rewritten through e_i -> e_i^(1) (e_i^(2))^-1.
  Substitution conj_images;
  for (int i = 1; i <= g.m(); ++i) {
    if (i <= g.r()) {
      conj_images.emplace(i, Word{gens.symbol(Family::s1, i, 2)});
    } else {
      conj_images.emplace(i, Word{gens.symbol(Family::s2, i, 1),
                                  -gens.symbol(Family::s2, i, 2)});
    }
  }
  GenWord result;
  for (auto const& t : terms) {
    int sym = t.commutator ? gens.symbol(Family::s3, t.i, t.j)
                           : gens.symbol(Family::s2, t.i, 1);
    GenWord c = substitute(t.conjugator, conj_images);
    result = concat(result, conjugate(word_power(Word{sym}, t.sign), c));
  }
  return concat(result, lift_word);
}

}  // namespace

GenWord rewrite_in_generators(KernelGroup const& g,
                              ProductElement const& element) {
  if (g.n() < 2) {
    throw DomainError("rewriting needs n >= 2");
  }
  if (!g.contains(element)) {
    throw DomainError("element is not in " + g.name());
  }
  auto gens = standard_generators(g);
  if (g.is_standard()) {
    return rewrite_standard(g, gens, element);
  }
  KernelGroup standard(g.n(), g.m(), g.r());
  auto pulled = transport(element, basis_changes(g), true);
  return rewrite_standard(standard, standard_generators(standard), pulled);
}

ProductElement random_kernel_element(KernelGroup const& g, int length_budget,
                                     std::uint64_t seed) {
  auto gens = standard_generators(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, gens.size());
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (int k = 0; k < length_budget; ++k) {
    int s = pick(rng);
    letters.emplace_back(s, coin(rng) ? 1 : -1);
  }
  return gens.eval(Word(std::move(letters)));
}

}  // namespace kdp
