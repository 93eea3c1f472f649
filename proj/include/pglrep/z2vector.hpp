#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pglrep {

// Vector over Z/2 of length at most 64. Coordinate k (0-based) corresponds to
// the k-th character of the bit-string form, so "1000" has only x_1 set.
class Z2Vector {
 public:
  static constexpr int kMaxSize = 64;

  Z2Vector() = default;
  explicit Z2Vector(int size);

  // Parses a string of '0'/'1'. Throws ParseError.
  static Z2Vector from_string(std::string_view bits);
  // Bit string whose first character is the most significant bit of `value`.
  static Z2Vector from_integer(int size, std::uint64_t value);

  int size() const { return size_; }
  bool get(int k) const;
  void set(int k, bool value);
  bool is_zero() const { return bits_ == 0; }
  std::string to_string() const;

  friend Z2Vector operator+(Z2Vector a, const Z2Vector& b);
  friend bool operator==(const Z2Vector&, const Z2Vector&) = default;
  // Lexicographic on the bit-string form.
  friend std::strong_ordering operator<=>(const Z2Vector& a, const Z2Vector& b);

 private:
  int size_ = 0;
  std::uint64_t bits_ = 0;  // bit k = coordinate k
};

// Intersection pairing on H^1 of a genus-g surface in the basis
// a_1, b_1, ..., a_g, b_g: sum over handles of (x_{2i-1} y_{2i} + x_{2i} y_{2i-1}).
bool symplectic_pairing(const Z2Vector& x, const Z2Vector& y);

}  // namespace pglrep
