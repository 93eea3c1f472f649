#include "pglrep/clifford.hpp"

#include <bit>
#include <ostream>
#include <string>

#include "pglrep/errors.hpp"

namespace pglrep {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxCliffordDimension) {
    throw BadDimension("Clifford dimension must be in [1, " + std::to_string(kMaxCliffordDimension) +
                       "], got " + std::to_string(n));
  }
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1U; }

// Number of transpositions needed to merge the factors of a and b into
// increasing order.
int reorder_parity(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return swaps & 1;
}

bool reversal_flips(int grade) { return (grade * (grade - 1) / 2) % 2 != 0; }

}  // namespace

int Blade::grade() const { return std::popcount(mask); }

BladeProduct blade_mul(Blade a, Blade b, int n) {
  check_dimension(n);
  if ((a.mask | b.mask) & ~full_mask(n)) {
    throw BadDimension("blade mask does not fit in dimension " + std::to_string(n));
  }
  // Contractions e_i e_i contribute +1 in positive signature.
  return {reorder_parity(a.mask, b.mask) ? -1 : 1, Blade{a.mask ^ b.mask}};
}

CliffordElement::CliffordElement(int n) : n_(n) { check_dimension(n); }

CliffordElement CliffordElement::scalar(int n, const Rational& value) {
  return blade(n, Blade{0}, value);
}

CliffordElement CliffordElement::basis_vector(int n, int i) {
  if (i < 0 || i >= n) throw BadDimension("basis index out of range");
  return blade(n, Blade{std::uint32_t{1} << i});
}

CliffordElement CliffordElement::vector(int n, std::span<const Rational> coords) {
  if (static_cast<int>(coords.size()) != n) {
    throw DimensionMismatch("vector has " + std::to_string(coords.size()) + " coordinates in Cl(" +
                            std::to_string(n) + ")");
  }
  CliffordElement v(n);
  for (int i = 0; i < n; ++i) v.add_term(std::uint32_t{1} << i, coords[static_cast<std::size_t>(i)]);
  return v;
}

CliffordElement CliffordElement::blade(int n, Blade b, const Rational& coeff) {
  CliffordElement x(n);
  if (b.mask & ~full_mask(n)) throw BadDimension("blade mask does not fit in dimension");
  x.add_term(b.mask, coeff);
  return x;
}

Rational CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b.mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CliffordElement::is_scalar() const {
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

bool CliffordElement::has_pure_grade(int k) const {
  if (terms_.empty()) return false;
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) != k) return false;
  }
  return true;
}

bool CliffordElement::is_even() const {
  if (terms_.empty()) return false;
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) % 2 != 0) return false;
  }
  return true;
}

bool CliffordElement::is_odd() const {
  if (terms_.empty()) return false;
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) % 2 == 0) return false;
  }
  return true;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [mask, c] : r.terms_) c = -c;
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  check_same_dimension(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  check_same_dimension(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

void CliffordElement::check_same_dimension(const CliffordElement& other) const {
  if (n_ != other.n_) {
    throw DimensionMismatch("Cl(" + std::to_string(n_) + ") and Cl(" + std::to_string(other.n_) +
                            ") elements cannot be combined");
  }
}

void CliffordElement::add_term(std::uint32_t mask, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::ostream& operator<<(std::ostream& os, const CliffordElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [mask, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')';
    if (mask == 0) continue;
    os << '*';
    for (int i = 0; i < x.dimension(); ++i) {
      if ((mask >> i) & 1U) os << 'e' << (i + 1);
    }
  }
  return os;
}

CliffordElement mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.dimension() != y.dimension()) {
    throw DimensionMismatch("Cl(" + std::to_string(x.dimension()) + ") times Cl(" +
                            std::to_string(y.dimension()) + ")");
  }
  // Accumulate raw sums first; zeros are pruned once at the end.
  CliffordElement::Terms acc;
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      Rational term = ca * cb;
      if (reorder_parity(ma, mb)) term = -term;
      auto [it, inserted] = acc.try_emplace(ma ^ mb, term);
      if (!inserted) it->second += term;
    }
  }
  CliffordElement result(x.dimension());
  for (const auto& [mask, c] : acc) {
    if (c != 0) result += CliffordElement::blade(x.dimension(), Blade{mask}, c);
  }
  return result;
}

CliffordElement grade_involution(const CliffordElement& x) {
  CliffordElement r(x.dimension());
  for (const auto& [mask, c] : x.terms()) {
    r += CliffordElement::blade(x.dimension(), Blade{mask}, std::popcount(mask) % 2 ? -c : c);
  }
  return r;
}

CliffordElement reversal(const CliffordElement& x) {
  CliffordElement r(x.dimension());
  for (const auto& [mask, c] : x.terms()) {
    r += CliffordElement::blade(x.dimension(), Blade{mask},
                                reversal_flips(std::popcount(mask)) ? -c : c);
  }
  return r;
}

CliffordElement volume_element(int n) {
  check_dimension(n);
  return CliffordElement::blade(n, Blade{full_mask(n)});
}

CliffordElement versor_inverse(const CliffordElement& g) {
  const CliffordElement rev = reversal(g);
  const CliffordElement norm = mul(g, rev);
  if (!norm.is_scalar()) throw NotAVersor("g * reversal(g) is not a nonzero scalar");
  return rev * (1 / norm.coefficient(Blade{0}));
}

RatMatrix twisted_conjugation_matrix(const CliffordElement& g) {
  const int n = g.dimension();
  const CliffordElement inv = versor_inverse(g);
  const CliffordElement twisted = grade_involution(g);
  RatMatrix a(n);
  for (int i = 0; i < n; ++i) {
    const CliffordElement image = twisted * CliffordElement::basis_vector(n, i) * inv;
    if (!image.has_pure_grade(1)) {
      throw NotVectorPreserving("image of e" + std::to_string(i + 1) + " is not a vector");
    }
    for (int r = 0; r < n; ++r) a(r, i) = image.coefficient(Blade{std::uint32_t{1} << r});
  }
  return a;
}

CliffordElement lift_orthogonal(const RatMatrix& a) {
  const int n = a.size();
  check_dimension(n);
  if (!is_orthogonal(a)) throw NotOrthogonal("cannot lift a non-orthogonal matrix");

  // Invariant: working = R_k ... R_1 a, lift = u_1 ... u_k, and the first i
  // columns of `working` are e_1..e_i. Each R_u is an involution, so at the
  // end a = R_1 ... R_k, whose twisted adjoint preimage is u_1 ... u_k.
  RatMatrix working = a;
  CliffordElement lift = CliffordElement::scalar(n, 1);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> u = working.column(i);
    u[static_cast<std::size_t>(i)] -= 1;
    Rational norm2 = 0;
    for (const auto& c : u) norm2 += c * c;
    if (norm2 == 0) continue;

    // working <- working - 2 u (u^T working) / |u|^2
    for (int col = i; col < n; ++col) {
      Rational dot = 0;
      for (int r = 0; r < n; ++r) dot += u[static_cast<std::size_t>(r)] * working(r, col);
      if (dot == 0) continue;
      const Rational f = 2 * dot / norm2;
      for (int r = 0; r < n; ++r) working(r, col) -= f * u[static_cast<std::size_t>(r)];
    }
    lift = lift * CliffordElement::vector(n, u);
  }
  return lift;
}

const char* to_string(KernelElement k) {
  switch (k) {
    case KernelElement::One: return "1";
    case KernelElement::MinusOne: return "-1";
    case KernelElement::Omega: return "omega";
    case KernelElement::MinusOmega: return "-omega";
  }
  return "?";
}

KernelElement commutator_product(std::span<const CliffordElement> lifts) {
  if (lifts.empty() || lifts.size() % 2 != 0) {
    throw BadInput("commutator_product needs a nonempty, even-length list of lifts");
  }
  const int n = lifts.front().dimension();
  CliffordElement product = CliffordElement::scalar(n, 1);
  for (std::size_t i = 0; i < lifts.size(); i += 2) {
    const CliffordElement& g = lifts[i];
    const CliffordElement& h = lifts[i + 1];
    product = product * g * h * versor_inverse(g) * versor_inverse(h);
  }
  const CliffordElement one = CliffordElement::scalar(n, 1);
  const CliffordElement omega = volume_element(n);
  if (product == one) return KernelElement::One;
  if (product == -one) return KernelElement::MinusOne;
  if (product == omega) return KernelElement::Omega;
  if (product == -omega) return KernelElement::MinusOmega;
  throw NotInKernel("commutator product is not one of +-1, +-omega");
}

}  // namespace pglrep
