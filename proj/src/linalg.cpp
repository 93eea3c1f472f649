#include "pglrep/linalg.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "pglrep/errors.hpp"

namespace pglrep {

RatMatrix::RatMatrix(int n) : n_(n) {
  if (n < 0) throw BadDimension("matrix size must be nonnegative");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> entries) {
  RatMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

RatMatrix RatMatrix::diagonal(std::initializer_list<int> entries) {
  std::vector<Rational> d(entries.begin(), entries.end());
  return diagonal(d);
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DimensionMismatch("row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                              " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(r);
}

RatMatrix RatMatrix::block_diagonal(const RatMatrix& upper, const RatMatrix& lower) {
  const int k = upper.n_;
  RatMatrix m(k + lower.n_);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = upper(i, j);
  for (int i = 0; i < lower.n_; ++i)
    for (int j = 0; j < lower.n_; ++j) m(k + i, k + j) = lower(i, j);
  return m;
}

std::vector<Rational> RatMatrix::column(int col) const {
  std::vector<Rational> c(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, col);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::determinant() const {
  // Gaussian elimination over Q.
  RatMatrix m = *this;
  Rational det = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && m(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (int row = col + 1; row < n_; ++row) {
      if (m(row, col) == 0) continue;
      const Rational f = m(row, col) / p;
      for (int j = col; j < n_; ++j) m(row, j) -= f * m(col, j);
    }
  }
  return det;
}

bool RatMatrix::is_identity() const { return *this == identity(n_); }

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.n_) + "x" + std::to_string(a.n_) +
                            " by " + std::to_string(b.n_) + "x" + std::to_string(b.n_));
  }
  const int n = a.n_;
  RatMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (int i = 0; i < m.size(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.size(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  return os << ']';
}

bool is_orthogonal(const RatMatrix& a) { return (a.transpose() * a).is_identity(); }

OrthComponent component(const RatMatrix& a) {
  if (!is_orthogonal(a)) throw NotOrthogonal("matrix is not orthogonal");
  return a.determinant() > 0 ? OrthComponent::SOn : OrthComponent::OMinus;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("commutator of matrices of different size");
  if (!is_orthogonal(a) || !is_orthogonal(b)) {
    throw NotOrthogonal("commutator is only defined here for orthogonal matrices");
  }
  return a * b * a.transpose() * b.transpose();
}

const char* to_string(OrthComponent c) { return c == OrthComponent::SOn ? "SO" : "O-"; }

}  // namespace pglrep
