#include "cob2/matrix.hpp"

#include <string>
#include <utility>

#include "cob2/errors.hpp"

namespace cob2 {

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldValue::zero(field)) {}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::vector<FieldValue> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix of shape " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " given " + std::to_string(entries_.size()) +
                            " entries");
  }
  for (const auto& v : entries_) {
    if (v.field() != field) throw FieldError("matrix entry outside " + field.to_string());
  }
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldValue::one(field);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  ExactMatrix work = *this;
  ExactMatrix inv = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const FieldValue scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const FieldValue factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::pow(std::size_t exponent) const {
  if (rows_ != cols_) throw DimensionMismatch("matrix power of a non-square matrix");
  ExactMatrix result = identity(field_, rows_);
  ExactMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  if (a.field() != b.field()) throw FieldError("matrix product across fields");
  ExactMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldValue& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j).add_product(aik, b(k, j));
      }
    }
  }
  return c;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw FieldError("Kronecker product across fields");
  ExactMatrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const FieldValue& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (b(br, bc).is_zero()) continue;
          k(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return k;
}

}  // namespace cob2
