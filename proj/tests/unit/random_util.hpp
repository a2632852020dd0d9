#pragma once

#include <random>
#include <vector>

#include "abelian.hpp"

namespace coincalc::testutil {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Int bound) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Small finite group with a random divisibility chain.
inline FgAbGroup random_finite_group(std::mt19937_64& rng, std::size_t max_factors = 3, Int max_order = 200) {
  static const std::vector<Int> primes_mult = {2, 3, 2, 5, 2, 3};
  std::uniform_int_distribution<std::size_t> count(0, max_factors);
  std::size_t k = count(rng);
  std::vector<Int> torsion;
  Int order = 1;
  Int last = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, primes_mult.size() - 1);
    Int t = last * primes_mult[pick(rng)];
    if (i == 0 && rng() % 2) t *= primes_mult[pick(rng)];
    if (order * t > max_order) break;
    torsion.push_back(t);
    order *= t;
    last = t;
  }
  return FgAbGroup(0, torsion);
}

inline FgAbGroup random_group(std::mt19937_64& rng) {
  FgAbGroup f = random_finite_group(rng);
  return FgAbGroup(rng() % 3, f.torsion());
}

inline GroupElement random_element(std::mt19937_64& rng, const FgAbGroup& g, Int bound = 5) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  std::vector<Int> c(g.generator_count());
  for (auto& x : c) x = dist(rng);
  return GroupElement(g, c);
}

// Random well-defined homomorphism: pick images of each generator with order
// compatible with the generator's order.
inline GroupHom random_hom(std::mt19937_64& rng, const FgAbGroup& a, const FgAbGroup& b) {
  Matrix m(b.generator_count(), a.generator_count());
  for (std::size_t j = 0; j < a.generator_count(); ++j) {
    Int t = a.modulus(j);
    for (std::size_t i = 0; i < b.generator_count(); ++i) {
      Int s = b.modulus(i);
      Int x = static_cast<Int>(rng() % 7) - 3;
      if (t == 0) {
        m(i, j) = x;
      } else if (s == 0) {
        m(i, j) = 0;
      } else {
        // t * y = 0 mod s  <=>  y multiple of s / gcd(s, t).
        m(i, j) = x * (s / checked::gcd(s, t));
      }
    }
  }
  return GroupHom(a, b, m);
}

}  // namespace coincalc::testutil
