#include "pglrep/z2vector.hpp"

#include <bit>

#include "pglrep/errors.hpp"

namespace pglrep {

Z2Vector::Z2Vector(int size) : size_(size) {
  if (size < 0 || size > kMaxSize) {
    throw BadInput("Z2Vector size must be in [0, 64], got " + std::to_string(size));
  }
}

Z2Vector Z2Vector::from_string(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxSize)) {
    throw ParseError("bit string longer than 64");
  }
  Z2Vector v(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      v.bits_ |= std::uint64_t{1} << k;
    } else if (bits[k] != '0') {
      throw ParseError("bit string may only contain 0 and 1: '" + std::string(bits) + "'");
    }
  }
  return v;
}

Z2Vector Z2Vector::from_integer(int size, std::uint64_t value) {
  Z2Vector v(size);
  for (int k = 0; k < size; ++k) {
    v.set(k, (value >> (size - 1 - k)) & 1U);
  }
  return v;
}

bool Z2Vector::get(int k) const {
  if (k < 0 || k >= size_) throw BadInput("Z2Vector index out of range");
  return (bits_ >> k) & 1U;
}

void Z2Vector::set(int k, bool value) {
  if (k < 0 || k >= size_) throw BadInput("Z2Vector index out of range");
  const std::uint64_t bit = std::uint64_t{1} << k;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::string Z2Vector::to_string() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int k = 0; k < size_; ++k) {
    if ((bits_ >> k) & 1U) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

Z2Vector operator+(Z2Vector a, const Z2Vector& b) {
  if (a.size_ != b.size_) throw BadInput("Z2Vector size mismatch");
  a.bits_ ^= b.bits_;
  return a;
}

std::strong_ordering operator<=>(const Z2Vector& a, const Z2Vector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (a.bits_ == b.bits_) return std::strong_ordering::equal;
  // First differing coordinate decides; coordinate 0 is the leading character.
  const int k = std::countr_zero(a.bits_ ^ b.bits_);
  return ((a.bits_ >> k) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool symplectic_pairing(const Z2Vector& x, const Z2Vector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw BadInput("symplectic pairing needs equal, even-length vectors");
  }
  bool acc = false;
  for (int i = 0; i < x.size(); i += 2) {
    acc ^= (x.get(i) && y.get(i + 1)) != (x.get(i + 1) && y.get(i));
  }
  return acc;
}

}  // namespace pglrep
