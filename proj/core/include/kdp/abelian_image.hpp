#pragma once

// Homomorphisms F_m -> Z^r given by integer matrices, and normalisation of a
// surjective one to the standard form e_i -> t_i (i <= r), e_i -> 0 (i > r)
// by elementary integer row moves, each lifted to a Nielsen move on the basis.

#include <cstdint>
#include <string>
#include <vector>

#include "kdp/free_words.hpp"

namespace kdp {

class AbelianVector {
 public:
  AbelianVector() = default;
  explicit AbelianVector(std::size_t r) : coords_(r, 0) {}
  explicit AbelianVector(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}

  static AbelianVector unit(std::size_t r, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::vector<std::int64_t> const& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  AbelianVector& operator+=(AbelianVector const& o);
  AbelianVector& operator-=(AbelianVector const& o);
  AbelianVector& add_scaled(AbelianVector const& o, std::int64_t k);
  friend AbelianVector operator+(AbelianVector a, AbelianVector const& b) {
    return a += b;
  }
  friend AbelianVector operator-(AbelianVector a, AbelianVector const& b) {
    return a -= b;
  }
  AbelianVector operator-() const;

  friend bool operator==(AbelianVector const&, AbelianVector const&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::string to_string(AbelianVector const& v);

// Row j-1 is the image of e_j.
class FactorHom {
 public:
  FactorHom(int rank, int target_rank, std::vector<AbelianVector> images);

  // e_j -> t_j for j <= r, 0 otherwise.
  static FactorHom standard(int rank, int target_rank);

  int rank() const noexcept { return rank_; }
  int target_rank() const noexcept { return target_rank_; }
  std::vector<AbelianVector> const& images() const noexcept { return images_; }
  AbelianVector const& image(int generator) const;
  bool is_standard() const;

  friend bool operator==(FactorHom const&, FactorHom const&) = default;

 private:
  int rank_;
  int target_rank_;
  std::vector<AbelianVector> images_;
};

AbelianVector ab_image(FactorHom const& h, Word const& w);

// Rows generate Z^r. Decided by integer row reduction to echelon form.
bool is_surjective(FactorHom const& h);

struct NielsenMove {
  enum class Kind { swap, invert, multiply };
  Kind kind;
  int i;         // 1-based basis position
  int j = 0;     // second position (swap, multiply)
  int sign = 1;  // multiply: e_i <- e_i e_j^sign

  static NielsenMove swap(int i, int j) { return {Kind::swap, i, j, 1}; }
  static NielsenMove invert(int i) { return {Kind::invert, i, 0, 1}; }
  static NielsenMove multiply(int i, int j, int sign) {
    return {Kind::multiply, i, j, sign};
  }

  NielsenMove inverse() const;
  friend bool operator==(NielsenMove const&, NielsenMove const&) = default;
};

std::string to_string(NielsenMove const& m);

// Applies the moves in order to the basis (in place).
void apply_moves(std::vector<Word>& basis, std::vector<NielsenMove> const& moves);
std::vector<Word> standard_basis(int rank);

struct BasisChange {
  std::vector<NielsenMove> moves;
  // Words in the old basis; new_basis[i] is the image of e_{i+1}.
  std::vector<Word> new_basis;
  // Images of the inverse automorphism: inverse_basis[i] is e_{i+1} written
  // in the new basis.
  std::vector<Word> inverse_basis;

  Substitution as_substitution() const;
  Substitution inverse_substitution() const;
};

// Throws DomainError when h is not surjective.
BasisChange normalize_basis(FactorHom const& h);

// h composed with the basis change: the row of e_j becomes ab_image(h, new_basis[j]).
FactorHom compose(FactorHom const& h, std::vector<Word> const& basis);

}  // namespace kdp
