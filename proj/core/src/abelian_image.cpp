#include "kdp/abelian_image.hpp"

#include <cstdlib>
#include <optional>

#include "kdp/error.hpp"

namespace kdp {

AbelianVector AbelianVector::unit(std::size_t r, std::size_t i) {
  AbelianVector v(r);
  v.coords_.at(i) = 1;
  return v;
}

bool AbelianVector::is_zero() const noexcept {
  for (auto c : coords_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

AbelianVector& AbelianVector::operator+=(AbelianVector const& o) {
  return add_scaled(o, 1);
}

AbelianVector& AbelianVector::operator-=(AbelianVector const& o) {
  return add_scaled(o, -1);
}

AbelianVector& AbelianVector::add_scaled(AbelianVector const& o,
                                         std::int64_t k) {
  if (o.size() != size()) {
    throw RankError("abelian vectors of different length");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += k * o.coords_[i];
  }
  return *this;
}

AbelianVector AbelianVector::operator-() const {
  AbelianVector v(*this);
  for (auto& c : v.coords_) {
    c = -c;
  }
  return v;
}

std::string to_string(AbelianVector const& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(v[i]);
  }
  return out + ")";
}

FactorHom::FactorHom(int rank, int target_rank,
                     std::vector<AbelianVector> images)
    : rank_(rank), target_rank_(target_rank), images_(std::move(images)) {
  if (rank < 0 || target_rank < 0) {
    throw RankError("negative rank");
  }
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw RankError("expected " + std::to_string(rank) + " image rows, got " +
                    std::to_string(images_.size()));
  }
  for (auto const& row : images_) {
    if (row.size() != static_cast<std::size_t>(target_rank)) {
      throw RankError("image row has length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(target_rank));
    }
  }
}

FactorHom FactorHom::standard(int rank, int target_rank) {
  if (target_rank > rank) {
    throw RankError("standard map needs r <= m");
  }
  std::vector<AbelianVector> rows;
  for (int j = 0; j < rank; ++j) {
    rows.push_back(j < target_rank ? AbelianVector::unit(target_rank, j)
                                   : AbelianVector(target_rank));
  }
  return FactorHom(rank, target_rank, std::move(rows));
}

AbelianVector const& FactorHom::image(int generator) const {
  if (generator < 1 || generator > rank_) {
    throw RankError("generator " + std::to_string(generator) +
                    " out of range for rank " + std::to_string(rank_));
  }
  return images_[generator - 1];
}

bool FactorHom::is_standard() const {
  return rank_ >= target_rank_ && *this == standard(rank_, target_rank_);
}

AbelianVector ab_image(FactorHom const& h, Word const& w) {
  AbelianVector v(h.target_rank());
  for (Letter l : w) {
    v.add_scaled(h.image(l.generator()), l.sign());
  }
  return v;
}

namespace {

using Rows = std::vector<AbelianVector>;

void record(std::vector<NielsenMove>* moves, NielsenMove m) {
  if (moves) {
    moves->push_back(m);
  }
}

// row_i -= q * row_c, one elementary move per unit of q.
void subtract_multiple(Rows& rows, std::size_t i, std::size_t c,
                       std::int64_t q, std::vector<NielsenMove>* moves) {
  int sign = q > 0 ? -1 : 1;
  for (std::int64_t n = 0; n < std::llabs(q); ++n) {
    rows[i].add_scaled(rows[c], sign);
    record(moves, NielsenMove::multiply(static_cast<int>(i) + 1,
                                        static_cast<int>(c) + 1, sign));
  }
}

// Pivot with the smallest nonzero absolute value in column c among rows >= c,
// lowest index on ties.
std::optional<std::size_t> find_pivot(Rows const& rows, std::size_t c) {
  std::optional<std::size_t> best;
  for (std::size_t i = c; i < rows.size(); ++i) {
    auto v = std::llabs(rows[i][c]);
    if (v != 0 && (!best || v < std::llabs(rows[*best][c]))) {
      best = i;
    }
  }
  return best;
}

// Brings rows to [I_r; 0] when possible; false if the row lattice is a proper
// sublattice of Z^r.
bool reduce_to_standard(Rows& rows, std::size_t r,
                        std::vector<NielsenMove>* moves) {
  for (std::size_t c = 0; c < r; ++c) {
    while (true) {
      auto pivot = find_pivot(rows, c);
      if (!pivot) {
        return false;
      }
      if (*pivot != c) {
        std::swap(rows[*pivot], rows[c]);
        record(moves, NielsenMove::swap(static_cast<int>(c) + 1,
                                        static_cast<int>(*pivot) + 1));
      }
      bool column_clear = true;
      for (std::size_t i = c + 1; i < rows.size(); ++i) {
        std::int64_t q = rows[i][c] / rows[c][c];
        subtract_multiple(rows, i, c, q, moves);
        if (rows[i][c] != 0) {
          column_clear = false;
        }
      }
      if (column_clear) {
        break;
      }
    }
    if (rows[c][c] < 0) {
      rows[c] = -rows[c];
      record(moves, NielsenMove::invert(static_cast<int>(c) + 1));
    }
    if (rows[c][c] != 1) {
      return false;
    }
  }
  for (std::size_t c = r; c-- > 0;) {
    for (std::size_t i = 0; i < c; ++i) {
      subtract_multiple(rows, i, c, rows[i][c], moves);
    }
  }
  return true;
}

}  // namespace

bool is_surjective(FactorHom const& h) {
  Rows rows = h.images();
  return reduce_to_standard(rows, static_cast<std::size_t>(h.target_rank()),
                            nullptr);
}

NielsenMove NielsenMove::inverse() const {
  if (kind == Kind::multiply) {
    return multiply(i, j, -sign);
  }
  return *this;
}

std::string to_string(NielsenMove const& m) {
  switch (m.kind) {
    case NielsenMove::Kind::swap:
      return "swap(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
    case NielsenMove::Kind::invert:
      return "invert(" + std::to_string(m.i) + ")";
    case NielsenMove::Kind::multiply:
      return "multiply(" + std::to_string(m.i) + "," + std::to_string(m.j) +
             "," + (m.sign > 0 ? "+1" : "-1") + ")";
  }
  return {};
}

std::vector<Word> standard_basis(int rank) {
  std::vector<Word> basis;
  for (int j = 1; j <= rank; ++j) {
    basis.push_back(Word{j});
  }
  return basis;
}

void apply_moves(std::vector<Word>& basis,
                 std::vector<NielsenMove> const& moves) {
  auto at = [&](int i) -> Word& {
    if (i < 1 || static_cast<std::size_t>(i) > basis.size()) {
      throw RankError("Nielsen move index out of range");
    }
    return basis[i - 1];
  };
  for (auto const& m : moves) {
    switch (m.kind) {
      case NielsenMove::Kind::swap:
        std::swap(at(m.i), at(m.j));
        break;
      case NielsenMove::Kind::invert:
        at(m.i) = inverse(at(m.i));
        break;
      case NielsenMove::Kind::multiply:
        if (m.i == m.j) {
          throw DomainError("multiply move needs distinct positions");
        }
        at(m.i) = concat(at(m.i), m.sign > 0 ? at(m.j) : inverse(at(m.j)));
        break;
    }
  }
}

Substitution BasisChange::as_substitution() const {
  Substitution s;
  for (std::size_t i = 0; i < new_basis.size(); ++i) {
    s.emplace(static_cast<int>(i) + 1, new_basis[i]);
  }
  return s;
}

Substitution BasisChange::inverse_substitution() const {
  Substitution s;
  for (std::size_t i = 0; i < inverse_basis.size(); ++i) {
    s.emplace(static_cast<int>(i) + 1, inverse_basis[i]);
  }
  return s;
}

BasisChange normalize_basis(FactorHom const& h) {
  BasisChange change;
  Rows rows = h.images();
  if (!reduce_to_standard(rows, static_cast<std::size_t>(h.target_rank()),
                          &change.moves)) {
    throw DomainError("homomorphism is not surjective onto Z^" +
                      std::to_string(h.target_rank()));
  }
  change.new_basis = standard_basis(h.rank());
  apply_moves(change.new_basis, change.moves);

  std::vector<NielsenMove> undo;
  for (auto it = change.moves.rbegin(); it != change.moves.rend(); ++it) {
    undo.push_back(it->inverse());
  }
  change.inverse_basis = standard_basis(h.rank());
  apply_moves(change.inverse_basis, undo);
  return change;
}

FactorHom compose(FactorHom const& h, std::vector<Word> const& basis) {
  std::vector<AbelianVector> rows;
  rows.reserve(basis.size());
  for (auto const& w : basis) {
    rows.push_back(ab_image(h, w));
  }
  return FactorHom(static_cast<int>(basis.size()), h.target_rank(),
                   std::move(rows));
}

}  // namespace kdp
