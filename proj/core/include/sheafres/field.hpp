#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace sheafres {

/// Arbitrary-precision rational number, always kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "a", "-a" or "a/b" (b != 0).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }

 private:
  mpq_class value_{0};
};

/// Element of the prime field F_p. Every element carries its modulus so that
/// arithmetic needs no global state; mixing moduli is a logic error.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  std::string str() const { return std::to_string(value_); }
  ModP inverse() const;

  ModP& operator+=(const ModP& rhs);
  ModP& operator-=(const ModP& rhs);
  ModP& operator*=(const ModP& rhs);
  ModP& operator/=(const ModP& rhs) { return *this *= rhs.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a);
  friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

/// The field of rational numbers.
class RationalField {
 public:
  using Scalar = Rational;

  Scalar zero() const { return {}; }
  Scalar one() const { return Rational(1); }
  Scalar from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
  /// Integer or fraction literal.
  Scalar parse(std::string_view text) const { return Rational::parse(text); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "rational"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field F_p, p configurable at runtime.
class PrimeField {
 public:
  using Scalar = ModP;

  /// Throws DomainError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  Scalar zero() const { return ModP(0, p_); }
  Scalar one() const { return ModP(1, p_); }
  Scalar from_int(std::int64_t n) const { return ModP(n, p_); }
  /// Integer or fraction literal reduced mod p; a denominator divisible by p
  /// is rejected.
  Scalar parse(std::string_view text) const;
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  std::string name() const { return "mod " + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

template <class K>
concept Field = std::equality_comparable<K> && requires(const K& k, const typename K::Scalar& a,
                                                         std::string_view text) {
  typename K::Scalar;
  { k.zero() } -> std::same_as<typename K::Scalar>;
  { k.one() } -> std::same_as<typename K::Scalar>;
  { k.from_int(std::int64_t{}) } -> std::same_as<typename K::Scalar>;
  { k.parse(text) } -> std::same_as<typename K::Scalar>;
  { k.name() } -> std::convertible_to<std::string>;
  { a + a } -> std::same_as<typename K::Scalar>;
  { a - a } -> std::same_as<typename K::Scalar>;
  { a * a } -> std::same_as<typename K::Scalar>;
  { a / a } -> std::same_as<typename K::Scalar>;
  { -a } -> std::same_as<typename K::Scalar>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

/// Integer-mod-p primality check used by PrimeField.
bool is_prime(std::uint32_t n);

}  // namespace sheafres
