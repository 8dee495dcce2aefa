#pragma once

#include <string>
#include <vector>

#include "kdp/free_words.hpp"

namespace kdp {

// An element of F^(1)_m x ... x F^(n)_m: one reduced word per factor.
struct ProductElement {
  std::vector<Word> factors;

  std::size_t size() const noexcept { return factors.size(); }
  bool is_identity() const noexcept;
  Word const& operator[](std::size_t i) const { return factors[i]; }

  friend bool operator==(ProductElement const&, ProductElement const&) = default;
  friend auto operator<=>(ProductElement const&, ProductElement const&) = default;
};

struct ProductElementHash {
  std::size_t operator()(ProductElement const& g) const noexcept;
};

// Shape descriptor: n factors, each free of rank m.
class ProductGroup {
 public:
  ProductGroup(int factors, int rank);

  int factors() const noexcept { return factors_; }
  int rank() const noexcept { return rank_; }
  FreeGroup free_factor() const { return FreeGroup(rank_); }

  void check(ProductElement const& g) const;
  ProductElement identity() const;
  // The word w placed in factor i (0-based), identity elsewhere.
  ProductElement embed(std::size_t i, Word const& w) const;
  ProductElement mul(ProductElement const& a, ProductElement const& b) const;
  ProductElement inv(ProductElement const& a) const;
  ProductElement power(ProductElement const& a, long k) const;
  ProductElement commutator(ProductElement const& a,
                            ProductElement const& b) const;

  friend bool operator==(ProductGroup const&, ProductGroup const&) = default;

 private:
  int factors_;
  int rank_;
};

// Sum of reduced factor lengths.
long ambient_length(ProductElement const& g);

// `w1 | w2 | ...` using the standard alphabet of the given rank.
std::string to_string(ProductElement const& g, int rank);
ProductElement parse_product_element(std::string_view text,
                                     ProductGroup const& group);

}  // namespace kdp
