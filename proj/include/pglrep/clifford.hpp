#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "pglrep/linalg.hpp"
#include "pglrep/rational.hpp"

namespace pglrep {

// Largest supported dimension of the generating space; a blade is one word.
inline constexpr int kMaxCliffordDimension = 16;

// Basis monomial e_{i1} ... e_{ik} with i1 < ... < ik; bit i of the mask
// stands for e_{i+1}.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const;
  friend auto operator<=>(const Blade&, const Blade&) = default;
};

struct BladeProduct {
  int sign;  // +1 or -1
  Blade blade;
};

// Product of two basis blades in Cl(n) with e_i^2 = +1.
// Throws BadDimension if n is out of range or a mask does not fit.
BladeProduct blade_mul(Blade a, Blade b, int n);

// Sparse multivector in the positive-definite Clifford algebra Cl(n) with
// exact coefficients. Zero coefficients are never stored, so two elements
// are equal iff their term maps are.
class CliffordElement {
 public:
  using Terms = std::map<std::uint32_t, Rational>;

  // The zero element of Cl(n).
  explicit CliffordElement(int n);

  static CliffordElement scalar(int n, const Rational& value);
  static CliffordElement basis_vector(int n, int i);  // e_{i+1}, 0-based i
  static CliffordElement vector(int n, std::span<const Rational> coords);
  static CliffordElement blade(int n, Blade b, const Rational& coeff = 1);

  int dimension() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(Blade b) const;

  bool is_zero() const { return terms_.empty(); }
  // Nonzero element concentrated in grade 0.
  bool is_scalar() const;
  bool has_pure_grade(int k) const;
  bool is_even() const;
  bool is_odd() const;

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(const Rational& s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  void check_same_dimension(const CliffordElement& other) const;
  void add_term(std::uint32_t mask, const Rational& coeff);

  int n_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const CliffordElement& x);

// Geometric product. Throws DimensionMismatch.
CliffordElement mul(const CliffordElement& x, const CliffordElement& y);
inline CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
  return mul(x, y);
}

CliffordElement grade_involution(const CliffordElement& x);
CliffordElement reversal(const CliffordElement& x);

// omega_n = e_1 ... e_n.
CliffordElement volume_element(int n);

// g^{-1} = reversal(g) / (g reversal(g)). Throws NotAVersor unless
// g reversal(g) is a nonzero scalar.
CliffordElement versor_inverse(const CliffordElement& g);

// Matrix of x -> alpha(g) x g^{-1} on the span of e_1..e_n; column i is the
// image of e_{i+1}. Throws NotAVersor / NotVectorPreserving.
RatMatrix twisted_conjugation_matrix(const CliffordElement& g);

// Versor g with twisted_conjugation_matrix(g) == a, built as a product of
// (unnormalized) reflection vectors by reducing a column by column.
// Throws NotOrthogonal.
CliffordElement lift_orthogonal(const RatMatrix& a);

// Elements of the kernel of Pin(n) -> PO(n).
enum class KernelElement { One, MinusOne, Omega, MinusOmega };

const char* to_string(KernelElement k);

// Product over handles of g_i h_i g_i^{-1} h_i^{-1}, lifts ordered
// g_1, h_1, g_2, h_2, ... Throws BadInput (odd or empty list),
// DimensionMismatch, NotAVersor, NotInKernel.
KernelElement commutator_product(std::span<const CliffordElement> lifts);

}  // namespace pglrep
