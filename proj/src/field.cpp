#include "quinn/field.hpp"

#include <sstream>
#include <utility>

namespace quinn {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  // 65521 keeps every product of two representatives inside 32 bits.
  if (p > 65521 || !is_prime(p)) {
    throw Error("not a supported prime: " + std::to_string(p));
  }
}

Scalar PrimeField::of(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  auto r = n % p;
  if (r < 0) r += p;
  return Scalar{static_cast<std::uint32_t>(r)};
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = one();
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return result;
}

std::optional<Scalar> PrimeField::try_inv(Scalar a) const {
  if (a.is_zero()) return std::nullopt;
  return pow(a, p_ - 2);
}

Scalar PrimeField::inv(Scalar a) const {
  auto r = try_inv(a);
  if (!r) throw Error("division by zero in Z_" + std::to_string(p_));
  return *r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error("matrix data has wrong size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
  return m;
}

Matrix Matrix::multiply(const PrimeField& f, const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

std::optional<Matrix> Matrix::inverse(const PrimeField& f) const {
  if (!square()) return std::nullopt;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar s = f.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = f.mul(a(col, j), s);
      inv(col, j) = f.mul(inv(col, j), s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar k = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = f.sub(a(r, j), f.mul(k, a(col, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(k, inv(col, j)));
      }
    }
  }
  return inv;
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j).value != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).value;
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace quinn
