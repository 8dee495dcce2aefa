#pragma once

#include <random>
#include <vector>

#include "kdp/free_words.hpp"
#include "kdp/product.hpp"

namespace kdp::sample {

// Unreduced letter sequences, so reduction gets exercised.
inline std::vector<int> random_letters(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution inv(0.5);
  std::vector<int> out;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    out.push_back(inv(rng) ? -g : g);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int len) {
  auto letters = random_letters(rng, rank, len);
  return Word::from_signed(letters);
}

inline ProductElement random_element(std::mt19937_64& rng, int factors, int rank,
                                     int len) {
  ProductElement g;
  for (int i = 0; i < factors; ++i) {
    g.factors.push_back(random_word(rng, rank, len));
  }
  return g;
}

}  // namespace kdp::sample
