#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "pglrep/rational.hpp"

namespace pglrep {

// Dense polynomial in t with integer coefficients; index = degree. No
// trailing zero coefficients, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(const Integer& coeff, int degree);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coefficient(int degree) const;
  Integer evaluate(const Integer& t) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_pow(const IntPolynomial& base, unsigned exponent);

// q with q * den == num. Throws BadInput for den == 0, NotDivisible if the
// remainder is nonzero or a quotient coefficient is not integral.
IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return poly_add(a, b); }
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return poly_sub(a, b); }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return poly_mul(a, b); }

std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Numerator -(1+t)^{2g} t^e + (1+t^3)^{2g}, e = 2g+2 for w2 = 0 and 2g for w2 = 1.
IntPolynomial so3_numerator(int w2, int genus);
// (1 - t^2)(1 - t^4).
IntPolynomial so3_denominator();

// Poincare polynomial of the SO(3) representation variety with the given w2.
// Throws BadInput (w2 not 0/1, genus < 2) or NotDivisible.
IntPolynomial pt_so3(int w2, int genus);

// Same for SL(3,R): the w2 = 0 part adds the contractible Hitchin component.
IntPolynomial pt_sl3(int w2, int genus);

}  // namespace pglrep
