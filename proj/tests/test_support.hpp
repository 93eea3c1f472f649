#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "pglrep/clifford.hpp"
#include "pglrep/linalg.hpp"
#include "pglrep/rational.hpp"

namespace pglrep::testing {

// Nonzero rational p/q with |p|, q <= bound.
inline Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(1, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::bernoulli_distribution neg(0.5);
  Rational r(num(rng) * (neg(rng) ? -1 : 1), den(rng));
  r.canonicalize();
  return r;
}

// Random signed permutation matrix.
inline RatMatrix random_signed_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution neg(0.5);
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, perm[static_cast<std::size_t>(i)]) = neg(rng) ? -1 : 1;
  return m;
}

// Rotation by the angle with cos = (a^2 - b^2)/c, sin = 2ab/c, c = a^2 + b^2,
// acting in the (i, j) coordinate plane.
inline RatMatrix pythagorean_rotation(int n, int i, int j, int a, int b) {
  const Rational c = a * a + b * b;
  const Rational cos = Rational(a * a - b * b) / c;
  const Rational sin = Rational(2 * a * b) / c;
  RatMatrix m = RatMatrix::identity(n);
  m(i, i) = cos;
  m(j, j) = cos;
  m(i, j) = -sin;
  m(j, i) = sin;
  return m;
}

// Signed permutation composed with `rotations` random Pythagorean rotations.
inline RatMatrix random_orthogonal(std::mt19937_64& rng, int n, int rotations = 2) {
  RatMatrix m = random_signed_permutation(rng, n);
  if (n < 2) return m;
  std::uniform_int_distribution<int> coord(0, n - 1);
  std::uniform_int_distribution<int> param(1, 4);
  for (int r = 0; r < rotations; ++r) {
    const int i = coord(rng);
    int j = coord(rng);
    while (j == i) j = coord(rng);
    int a = param(rng);
    int b = param(rng);
    if (a == b) ++a;
    m = m * pythagorean_rotation(n, i, j, a, b);
  }
  return m;
}

// Independent blade product: multiply index lists by bubble-sorting the
// concatenation and cancelling equal neighbours (e_i e_i = 1).
inline std::pair<int, std::vector<int>> index_blade_product(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        sign = -sign;
        changed = true;
      } else if (a[k] == a[k + 1]) {
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(k), a.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, a};
}

inline std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

inline std::uint32_t indices_mask(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= std::uint32_t{1} << i;
  return m;
}

// Random versor: product of k random nonzero rational vectors.
inline CliffordElement random_versor(std::mt19937_64& rng, int n, int k) {
  CliffordElement g = CliffordElement::scalar(n, 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int r = 0; r < k; ++r) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : v) {
        c = coeff(rng);
        nonzero = nonzero || c != 0;
      }
    }
    g = g * CliffordElement::vector(n, v);
  }
  return g;
}

}  // namespace pglrep::testing
