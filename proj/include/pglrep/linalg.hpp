#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "pglrep/rational.hpp"

namespace pglrep {

// Square matrix with exact rational entries, stored row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  // n x n zero matrix.
  explicit RatMatrix(int n);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(std::span<const Rational> entries);
  static RatMatrix diagonal(std::initializer_list<int> entries);
  // Throws DimensionMismatch unless the rows form a square array.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static RatMatrix block_diagonal(const RatMatrix& upper, const RatMatrix& lower);

  int size() const { return n_; }
  const Rational& operator()(int row, int col) const { return entries_[index(row, col)]; }
  Rational& operator()(int row, int col) { return entries_[index(row, col)]; }

  std::vector<Rational> column(int col) const;
  RatMatrix transpose() const;
  Rational determinant() const;
  bool is_identity() const;

  RatMatrix operator-() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col);
  }

  int n_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

enum class OrthComponent { SOn, OMinus };

// True iff A^T A = I exactly.
bool is_orthogonal(const RatMatrix& a);

// Connected component of an orthogonal matrix, read off from det = +1 / -1.
// Throws NotOrthogonal.
OrthComponent component(const RatMatrix& a);

// A B A^{-1} B^{-1}, inverting by transposition. Both arguments must be
// orthogonal (NotOrthogonal) and of the same size (DimensionMismatch).
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

const char* to_string(OrthComponent c);

}  // namespace pglrep
