#include "kdp/product.hpp"

#include "kdp/error.hpp"

namespace kdp {

bool ProductElement::is_identity() const noexcept {
  for (auto const& w : factors) {
    if (!w.empty()) {
      return false;
    }
  }
  return true;
}

std::size_t ProductElementHash::operator()(
    ProductElement const& g) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  WordHash wh;
  for (auto const& w : g.factors) {
    h ^= wh(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ProductGroup::ProductGroup(int factors, int rank)
    : factors_(factors), rank_(rank) {
  if (factors < 0 || rank < 0) {
    throw RankError("negative product shape");
  }
}

void ProductGroup::check(ProductElement const& g) const {
  if (g.size() != static_cast<std::size_t>(factors_)) {
    throw RankError("element has " + std::to_string(g.size()) +
                    " factors, expected " + std::to_string(factors_));
  }
  FreeGroup f(rank_);
  for (auto const& w : g.factors) {
    f.check(w);
  }
}

ProductElement ProductGroup::identity() const {
  return ProductElement{std::vector<Word>(factors_)};
}

ProductElement ProductGroup::embed(std::size_t i, Word const& w) const {
  if (i >= static_cast<std::size_t>(factors_)) {
    throw RankError("factor index out of range");
  }
  FreeGroup(rank_).check(w);
  auto g = identity();
  g.factors[i] = w;
  return g;
}

ProductElement ProductGroup::mul(ProductElement const& a,
                                 ProductElement const& b) const {
  check(a);
  check(b);
  ProductElement out;
  out.factors.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.factors.push_back(concat(a[i], b[i]));
  }
  return out;
}

ProductElement ProductGroup::inv(ProductElement const& a) const {
  check(a);
  ProductElement out;
  out.factors.reserve(a.size());
  for (auto const& w : a.factors) {
    out.factors.push_back(inverse(w));
  }
  return out;
}

ProductElement ProductGroup::power(ProductElement const& a, long k) const {
  check(a);
  ProductElement out;
  for (auto const& w : a.factors) {
    out.factors.push_back(word_power(w, k));
  }
  return out;
}

ProductElement ProductGroup::commutator(ProductElement const& a,
                                        ProductElement const& b) const {
  check(a);
  check(b);
  ProductElement out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.factors.push_back(kdp::commutator(a[i], b[i]));
  }
  return out;
}

long ambient_length(ProductElement const& g) {
  long total = 0;
  for (auto const& w : g.factors) {
    total += static_cast<long>(w.size());
  }
  return total;
}

std::string to_string(ProductElement const& g, int rank) {
  auto alphabet = Alphabet::standard(rank);
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) {
      out += " | ";
    }
    out += to_string(g[i], alphabet);
  }
  return out;
}

ProductElement parse_product_element(std::string_view text,
                                     ProductGroup const& group) {
  auto alphabet = Alphabet::standard(group.rank());
  ProductElement g;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos
                                        ? std::string_view::npos
                                        : bar - start);
    try {
      g.factors.push_back(parse_word(piece, alphabet));
    } catch (ParseError const& e) {
      // Re-anchor the column to the full input.
      throw ParseError(e.message(), e.line(),
                       e.line() == 1 ? e.column() + start : e.column());
    }
    if (bar == std::string_view::npos) {
      break;
    }
    start = bar + 1;
  }
  group.check(g);
  return g;
}

}  // namespace kdp
