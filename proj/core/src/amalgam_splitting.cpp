#include "kdp/amalgam_splitting.hpp"

#include "kdp/error.hpp"

namespace kdp {

namespace {

GeneratingSet make_hat_generators(int n, int m) {
  ProductGroup amb(n, m);
  std::vector<std::string> names;
  std::vector<ProductElement> reals;
  for (int k = 1; k <= m; ++k) {
    auto e = amb.identity();
    e.factors[n - 2] = Word{k};
    e.factors[n - 1] = Word{-k};
    names.push_back("g" + std::to_string(k));
    reals.push_back(std::move(e));
  }
  return GeneratingSet(Alphabet(std::move(names)), std::move(reals), amb);
}

int checked_n(int n) {
  if (n < 2) {
    throw DomainError("the splitting needs n >= 2");
  }
  return n;
}

}  // namespace

SplittingData::SplittingData(int n, int m)
    : n_(checked_n(n)),
      m_(m),
      whole_(n, m, m),
      lower_(n - 1, m, m),
      hat_(make_hat_generators(n, m)) {
  for (auto const& g : hat_.realizations()) {
    if (!whole_.contains(g)) {
      throw VerificationError("SplittingData", "hat generator outside kernel");
    }
  }
}

void SplittingData::check_k(int k) const {
  if (k < 1 || k > m_) {
    throw DomainError("k = " + std::to_string(k) + " out of range 1.." +
                      std::to_string(m_));
  }
}

AbelianVector SplittingData::theta_k(int k, ProductElement const& g) const {
  check_k(k);
  lower_.ambient().check(g);
  AbelianVector v(static_cast<std::size_t>(m_ - 1));
  for (auto const& w : g.factors) {
    for (Letter l : w) {
      int j = l.generator();
      if (j < k) {
        v[j - 1] += l.sign();
      } else if (j > k) {
        v[j - 2] += l.sign();
      }
    }
  }
  return v;
}

long SplittingData::p_k(int k, ProductElement const& g) const {
  check_k(k);
  lower_.ambient().check(g);
  long total = 0;
  for (auto const& w : g.factors) {
    total += exponent_sum(w, k);
  }
  return total;
}

bool SplittingData::in_Lk(int k, ProductElement const& g) const {
  return theta_k(k, g).is_zero();
}

bool SplittingData::in_M(ProductElement const& g) const {
  return lower_.contains(g);
}

ProductElement SplittingData::lift(ProductElement const& lower_element) const {
  lower_.ambient().check(lower_element);
  auto out = lower_element;
  out.factors.emplace_back();
  return out;
}

ProductElement SplittingData::restrict(ProductElement const& full) const {
  whole_.ambient().check(full);
  if (!full.factors.back().empty()) {
    throw DomainError("last factor is not trivial");
  }
  ProductElement out = full;
  out.factors.pop_back();
  return out;
}

SemidirectParts semidirect_decompose(SplittingData const& d,
                                     ProductElement const& gamma) {
  if (!d.whole().contains(gamma)) {
    throw DomainError("element is not in " + d.whole().name());
  }
  // The n-th coordinate of g_k is e_k^-1, so flip every letter in place.
  std::vector<Letter> flipped;
  for (auto l : gamma.factors.back()) {
    flipped.push_back(l.inverse());
  }
  GenWord hat(std::move(flipped));
  auto const& amb = d.whole().ambient();
  ProductElement m_part = amb.mul(gamma, amb.inv(d.hat_generators().eval(hat)));
  if (!m_part.factors.back().empty() || !d.in_M(d.restrict(m_part))) {
    throw VerificationError("semidirect_decompose", "m_part not in M");
  }
  return {std::move(m_part), std::move(hat)};
}

std::vector<Block> blocks_of(GenWord const& hat_word) {
  std::vector<Block> blocks;
  for (Letter l : hat_word) {
    if (!blocks.empty() && blocks.back().k == l.generator()) {
      blocks.back().exponent += l.sign();
    } else {
      blocks.push_back({l.generator(), l.sign()});
    }
  }
  return blocks;
}

SyllableForm syllable_form(SplittingData const& d,
                           ProductElement const& gamma) {
  auto parts = semidirect_decompose(d, gamma);
  return {d.restrict(parts.m_part), blocks_of(parts.hat_word)};
}

ProductElement single_block_image(SplittingData const& d,
                                  SyllableForm const& form) {
  if (form.blocks.size() > 1) {
    throw DomainError("more than one block");
  }
  auto const& amb = d.lower().ambient();
  if (form.blocks.empty()) {
    return form.m_part;
  }
  auto const& b = form.blocks.front();
  auto power = amb.embed(static_cast<std::size_t>(d.n() - 2),
                         word_power(Word{b.k}, b.exponent));
  return amb.mul(form.m_part, power);
}

}  // namespace kdp
