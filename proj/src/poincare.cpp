#include "pglrep/poincare.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "pglrep/errors.hpp"

namespace pglrep {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& coeff, int degree) {
  if (degree < 0) throw BadInput("negative degree");
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

Integer IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()), Integer(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] += b.coefficients()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()), Integer(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] -= b.coefficients()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Integer> c(x.size() + y.size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result{1};
  IntPolynomial square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = poly_mul(result, square);
    exponent >>= 1;
    if (exponent != 0) square = poly_mul(square, square);
  }
  return result;
}

IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw BadInput("division by the zero polynomial");
  if (num.is_zero()) return {};
  const int dd = den.degree();
  if (num.degree() < dd) throw NotDivisible("numerator degree below denominator degree");

  std::vector<Integer> rem = num.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(num.degree() - dd) + 1, Integer(0));
  const Integer& lead = den.coefficients().back();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible("quotient coefficient of t^" + std::to_string(k) + " is not an integer");
    }
    const Integer q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * den.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  const IntPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) {
    throw NotDivisible("nonzero remainder " + to_string(remainder) + " dividing by " + to_string(den));
  }
  return IntPolynomial(std::move(quot));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

namespace {

void check_w2_genus(int w2, int genus) {
  if (w2 != 0 && w2 != 1) throw BadInput("w2 must be 0 or 1");
  if (genus < 2) throw BadInput("genus must be at least 2");
}

}  // namespace

IntPolynomial so3_numerator(int w2, int genus) {
  check_w2_genus(w2, genus);
  const unsigned two_g = 2U * static_cast<unsigned>(genus);
  const int shift = static_cast<int>(two_g) + (w2 == 0 ? 2 : 0);
  const IntPolynomial one_plus_t{1, 1};
  const IntPolynomial one_plus_t3{1, 0, 0, 1};
  return poly_pow(one_plus_t3, two_g) -
         poly_pow(one_plus_t, two_g) * IntPolynomial::monomial(1, shift);
}

IntPolynomial so3_denominator() { return IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, 0, 0, -1}; }

IntPolynomial pt_so3(int w2, int genus) {
  return poly_divexact(so3_numerator(w2, genus), so3_denominator());
}

IntPolynomial pt_sl3(int w2, int genus) {
  IntPolynomial p = pt_so3(w2, genus);
  return w2 == 0 ? p + IntPolynomial{1} : p;
}

}  // namespace pglrep
