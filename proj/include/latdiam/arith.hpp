#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdiam {

using Int = std::int64_t;
using Point = std::vector<Int>;

class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when the input points do not span the ambient space.
class DegenerateInput : public std::runtime_error {
public:
  DegenerateInput(int affine_dim, int ambient_dim)
      : std::runtime_error("input spans an affine subspace of dimension " +
                           std::to_string(affine_dim) + " in dimension " +
                           std::to_string(ambient_dim)),
        affine_dim_(affine_dim) {}
  [[nodiscard]] int affine_dim() const noexcept { return affine_dim_; }

private:
  int affine_dim_;
};

/// A search ran out of its node or time allowance before finishing.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_abs(Int a) {
  if (a == INT64_MIN) throw OverflowError("integer overflow in abs");
  return a < 0 ? -a : a;
}

/// Exact dot product; accumulates in 128 bits, fails if the result leaves 64 bits.
inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<__int128>(a[i]) * b[i];
    if (acc > INT64_MAX || acc < INT64_MIN) throw OverflowError("integer overflow in dot product");
  }
  return static_cast<Int>(acc);
}

/// gcd of the absolute values of the entries; 0 for the zero vector.
inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, checked_abs(x));
  return g;
}

/// Divides v by its content in place; leaves the zero vector alone.
inline void make_primitive(std::span<Int> v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

/// Rank over the rationals, by fraction-free elimination with content reduction.
int integer_rank(std::vector<std::vector<Int>> rows);

}  // namespace latdiam
