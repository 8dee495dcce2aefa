#pragma once

// The kernels K^n_m(r) of maps F_m x ... x F_m (n factors) -> Z^r that are
// surjective on every factor, their standard finite generating sets, and a
// constructive rewriting of kernel elements over those generators.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kdp/abelian_image.hpp"
#include "kdp/free_words.hpp"
#include "kdp/product.hpp"

namespace kdp {

class KernelGroup {
 public:
  // Standard map: e_j -> t_j for j <= r, 0 otherwise, on every factor.
  KernelGroup(int n, int m, int r);
  // Arbitrary per-factor maps; each must be surjective onto Z^r.
  KernelGroup(int n, int m, int r, std::vector<FactorHom> maps);

  // "K<n>_<m>_<r>", e.g. K3_2_2.
  static KernelGroup parse(std::string_view name);
  std::string name() const;

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int r() const noexcept { return r_; }
  ProductGroup const& ambient() const noexcept { return ambient_; }
  std::vector<FactorHom> const& maps() const noexcept { return maps_; }
  bool is_standard() const;

  AbelianVector theta(ProductElement const& g) const;
  bool contains(ProductElement const& g) const;

 private:
  int n_;
  int m_;
  int r_;
  ProductGroup ambient_;
  std::vector<FactorHom> maps_;
};

// Words over a GeneratingSet's symbols.
using GenWord = Word;

class GeneratingSet {
 public:
  GeneratingSet(Alphabet symbols, std::vector<ProductElement> realizations,
                ProductGroup group);

  Alphabet const& symbols() const noexcept { return symbols_; }
  ProductGroup const& group() const noexcept { return group_; }
  int size() const noexcept { return symbols_.size(); }
  ProductElement const& realization(int symbol) const;
  std::vector<ProductElement> const& realizations() const noexcept {
    return realizations_;
  }

  ProductElement eval(GenWord const& w) const;
  GenWord parse(std::string_view text) const { return parse_word(text, symbols_); }
  std::string to_string(GenWord const& w) const {
    return kdp::to_string(w, symbols_);
  }

 private:
  Alphabet symbols_;
  std::vector<ProductElement> realizations_;
  ProductGroup group_;
};

// S1 = { e_i^(1) (e_i^(j))^-1 : i <= r, 2 <= j <= n }   named u<i>_<j>
// S2 = { e_i^(j) : i > r, 1 <= j <= n }                  named e<i>_<j>
// S3 = { [e_i^(1), e_j^(1)] : i < j <= r }               named c<i>_<j>
class StandardGenerators : public GeneratingSet {
 public:
  enum class Family { s1, s2, s3 };

  StandardGenerators(GeneratingSet set,
                     std::map<std::tuple<Family, int, int>, int> index);

  // Symbol (1-based) of the given family member.
  int symbol(Family f, int i, int j) const;
  std::size_t count(Family f) const;

 private:
  std::map<std::tuple<Family, int, int>, int> index_;
};

// Requires n >= 2. For non-standard maps the generators are transported along
// the basis change that normalises each factor map.
StandardGenerators standard_generators(KernelGroup const& g);

// A conjugate C s^sign C^-1 in the first factor, where s is either the free
// generator e_k (k > r) or the basic commutator [e_i, e_j] (i < j <= r).
struct ConjugatedGenerator {
  Word conjugator;
  bool commutator;  // false: free generator e_i (j unused)
  int i;
  int j;
  int sign;
};

// Writes a word of F_m whose exponent sums on e_1..e_r vanish as a product of
// conjugates of the e_k (k > r) and the [e_i, e_j] (i < j <= r). The product
// of the returned terms, in order, freely equals w.
std::vector<ConjugatedGenerator> collect_kernel_word(Word const& w, int r);

// Product of the terms of collect_kernel_word, as a word in F_m.
Word expand(std::vector<ConjugatedGenerator> const& terms);

// eval(standard_generators(g), result) == element. Throws DomainError when the
// element is not in the kernel or n < 2.
GenWord rewrite_in_generators(KernelGroup const& g,
                              ProductElement const& element);

// Evaluates a random GenWord of the given length over the standard
// generators; deterministic in the seed.
ProductElement random_kernel_element(KernelGroup const& g, int length_budget,
                                     std::uint64_t seed);

}  // namespace kdp
