#pragma once

// Exact arithmetic over a prime field Z_p and small dense matrices over it.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quinn/error.hpp"

namespace quinn {

/// A field element, always stored as its canonical representative in [0, p).
struct Scalar {
  std::uint32_t value = 0;

  constexpr Scalar() = default;
  constexpr explicit Scalar(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

class PrimeField {
 public:
  /// Throws Error if `p` is not a prime in [2, 65521].
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }

  /// Canonical representative of an arbitrary integer.
  Scalar of(std::int64_t n) const;

  Scalar add(Scalar a, Scalar b) const { return Scalar{(a.value + b.value) % p_}; }
  Scalar sub(Scalar a, Scalar b) const { return Scalar{(a.value + p_ - b.value) % p_}; }
  Scalar neg(Scalar a) const { return Scalar{(p_ - a.value) % p_}; }
  Scalar mul(Scalar a, Scalar b) const {
    return Scalar{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Throws Error on zero.
  Scalar inv(Scalar a) const;
  std::optional<Scalar> try_inv(Scalar a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Row-major dense matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix multiply(const PrimeField& f, const Matrix& rhs) const;
  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<Matrix> inverse(const PrimeField& f) const;
  bool is_identity() const;

  /// `[[2,4],[3,3]]`
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace quinn
