#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace cob2 {

/// The coefficient field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  constexpr FieldSpec() noexcept = default;

  static constexpr FieldSpec rational() noexcept { return FieldSpec{}; }
  /// Throws FieldError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return modulus_ == 0 ? Kind::Rational : Kind::Prime; }
  bool is_rational() const noexcept { return modulus_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  /// "rational" or "F_p".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with
/// positive denominator; prime-field values are residues in [0, p).
class FieldValue {
 public:
  /// Rational zero.
  FieldValue() = default;

  static FieldValue zero(FieldSpec field);
  static FieldValue one(FieldSpec field);
  static FieldValue integer(FieldSpec field, long long value);
  static FieldValue integer(FieldSpec field, const mpz_class& value);
  /// Maps a rational into `field`. Throws FieldError if the denominator
  /// vanishes modulo p.
  static FieldValue from_rational(FieldSpec field, const mpq_class& value);
  /// Parses "n" or "a/b" (optionally signed). Throws FieldError.
  static FieldValue parse(FieldSpec field, std::string_view text);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only meaningful for rational values.
  const mpq_class& rational() const;
  /// Only meaningful for prime-field values.
  std::uint32_t residue() const;

  /// Throws FieldError on zero.
  FieldValue inverse() const;

  FieldValue& operator+=(const FieldValue& other);
  FieldValue& operator-=(const FieldValue& other);
  FieldValue& operator*=(const FieldValue& other);
  FieldValue& operator/=(const FieldValue& other);

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }
  FieldValue operator-() const;

  /// a += b * c without a temporary for the product of residues.
  void add_product(const FieldValue& b, const FieldValue& c);

  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// "a/b" or "n" for rationals, decimal residue for prime fields.
  std::string to_string() const;

 private:
  void require_same_field(const FieldValue& other) const;

  FieldSpec field_{};
  std::variant<mpq_class, std::uint32_t> value_{};
};

std::ostream& operator<<(std::ostream& os, const FieldValue& value);

}  // namespace cob2
