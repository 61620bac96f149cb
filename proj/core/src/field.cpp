#include "cob2/field.hpp"

#include <charconv>
#include <ostream>

#include "cob2/errors.hpp"

namespace cob2 {

namespace {

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw FieldError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw FieldError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  FieldSpec f;
  f.modulus_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "rational";
  return "F_" + std::to_string(modulus_);
}

FieldValue FieldValue::zero(FieldSpec field) { return integer(field, 0); }

FieldValue FieldValue::one(FieldSpec field) { return integer(field, 1); }

FieldValue FieldValue::integer(FieldSpec field, long long value) {
  FieldValue v;
  v.field_ = field;
  if (field.is_rational()) {
    v.value_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    const long long p = field.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    v.value_ = static_cast<std::uint32_t>(r);
  }
  return v;
}

FieldValue FieldValue::integer(FieldSpec field, const mpz_class& value) {
  FieldValue v;
  v.field_ = field;
  if (field.is_rational()) {
    v.value_ = mpq_class(value);
  } else {
    v.value_ = reduce(value, field.characteristic());
  }
  return v;
}

FieldValue FieldValue::from_rational(FieldSpec field, const mpq_class& value) {
  if (field.is_rational()) {
    FieldValue v;
    v.field_ = field;
    mpq_class q = value;
    q.canonicalize();
    v.value_ = std::move(q);
    return v;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw FieldError("denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  FieldValue v = integer(field, value.get_num());
  return v * integer(field, static_cast<long long>(den)).inverse();
}

FieldValue FieldValue::parse(FieldSpec field, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(field, parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw FieldError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const mpz_class num = parse_integer(text.substr(0, slash));
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return from_rational(field, mpq_class(num, den));
}

bool FieldValue::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool FieldValue::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& FieldValue::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("value lives in " + field_.to_string() + ", not the rationals");
}

std::uint32_t FieldValue::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw FieldError("value is rational, not a residue");
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  FieldValue v;
  v.field_ = field_;
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    v.value_ = mpq_class(1) / *q;
  } else {
    const std::uint32_t p = field_.characteristic();
    v.value_ = pow_mod(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return v;
}

void FieldValue::require_same_field(const FieldValue& other) const {
  if (field_ != other.field_) {
    throw FieldError("mixed-field arithmetic: " + field_.to_string() + " vs " +
                     other.field_.to_string());
  }
}

FieldValue& FieldValue::operator+=(const FieldValue& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(other.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + std::get<std::uint32_t>(other.value_)) % p);
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(other.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + p - std::get<std::uint32_t>(other.value_)) % p);
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(other.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(other.value_) % p);
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

FieldValue FieldValue::operator-() const {
  return zero(field_) - *this;
}

void FieldValue::add_product(const FieldValue& b, const FieldValue& c) {
  require_same_field(b);
  require_same_field(c);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(b.value_) * std::get<mpq_class>(c.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    const std::uint64_t prod =
        std::uint64_t{std::get<std::uint32_t>(b.value_)} * std::get<std::uint32_t>(c.value_) % p;
    r = static_cast<std::uint32_t>((r + prod) % p);
  }
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldValue::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const FieldValue& value) {
  return os << value.to_string();
}

}  // namespace cob2
