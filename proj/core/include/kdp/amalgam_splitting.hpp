#pragma once

// K^n_m(m) as an amalgam of the L_k = ker(theta_k) over M = K^(n-1)_m(m).
//
// Elements of K^n_m(m) split as m_part * w(g_1, ..., g_m) where the hat
// generators g_k = e_k^(n-1) (e_k^(n))^-1 span a complement to M. The
// syllable form of an element is (m_part, run-length blocks of that hat word).

#include <utility>
#include <vector>

#include "kdp/abelian_image.hpp"
#include "kdp/kernel_groups.hpp"
#include "kdp/product.hpp"

namespace kdp {

class SplittingData {
 public:
  // n >= 2, m >= 1; the whole group is K^n_m(m).
  SplittingData(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  KernelGroup const& whole() const noexcept { return whole_; }
  // M = K^(n-1)_m(m) on the first n-1 factors.
  KernelGroup const& lower() const noexcept { return lower_; }
  // Hat generators as elements of the n-factor product, symbols g1..gm.
  GeneratingSet const& hat_generators() const noexcept { return hat_; }

  // theta_k on the first n-1 factors: e_j -> t_j (j < k), 0 (j = k),
  // t_{j-1} (j > k).
  AbelianVector theta_k(int k, ProductElement const& g) const;
  // Total exponent sum of e_k across the n-1 factors.
  long p_k(int k, ProductElement const& g) const;
  bool in_Lk(int k, ProductElement const& g) const;
  bool in_M(ProductElement const& g) const;

  // Embeds an (n-1)-factor element with a trivial last factor.
  ProductElement lift(ProductElement const& lower_element) const;
  // Drops the (trivial) last factor.
  ProductElement restrict(ProductElement const& full_element) const;

 private:
  void check_k(int k) const;

  int n_;
  int m_;
  KernelGroup whole_;
  KernelGroup lower_;
  GeneratingSet hat_;
};

struct SemidirectParts {
  ProductElement m_part;  // n factors, last one trivial
  GenWord hat_word;       // over g1..gm
};

// gamma = m_part * eval(hat_word). Throws DomainError outside K^n_m(m).
SemidirectParts semidirect_decompose(SplittingData const& d,
                                     ProductElement const& gamma);

struct Block {
  int k;
  long exponent;
  friend bool operator==(Block const&, Block const&) = default;
};

struct SyllableForm {
  ProductElement m_part;  // n-1 factors, an element of M
  std::vector<Block> blocks;
};

std::vector<Block> blocks_of(GenWord const& hat_word);
SyllableForm syllable_form(SplittingData const& d, ProductElement const& gamma);

// Under g_k -> e_k^(n-1): m_part * (e_k^(n-1))^exponent, an element of the
// first n-1 factors. Only defined for forms with at most one block.
ProductElement single_block_image(SplittingData const& d,
                                  SyllableForm const& form);

}  // namespace kdp
