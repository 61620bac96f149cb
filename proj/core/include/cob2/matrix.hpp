#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cob2/field.hpp"

namespace cob2 {

/// Dense row-major matrix of exact field values. All entries share one field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix.
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; throws DimensionMismatch or
  /// FieldError if sizes or fields disagree.
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<FieldValue> entries);

  static ExactMatrix identity(FieldSpec field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }

  const FieldValue& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldValue& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const FieldValue> entries() const noexcept { return entries_; }

  ExactMatrix transpose() const;
  /// Gauss-Jordan elimination; nullopt if singular or not square.
  std::optional<ExactMatrix> inverse() const;
  /// Square matrices only.
  ExactMatrix pow(std::size_t exponent) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldValue> entries_;
};

/// Ordinary product a*b; zero entries of `a` are skipped.
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product with the first factor's indices most significant.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace cob2
