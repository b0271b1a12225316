#include "sheafres/field.hpp"

#include <stdexcept>

#include "sheafres/errors.hpp"

namespace sheafres {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

// Splits "a/b" into numerator and denominator literals; "a" yields "1".
std::pair<std::string_view, std::string_view> split_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {text, "1"};
  return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto [num, den] = split_fraction(text);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("rational literal '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

ModP::ModP(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  auto m = static_cast<std::int64_t>(modulus);
  auto r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint32_t>(r);
}

ModP ModP::inverse() const {
  if (value_ == 0) throw DomainError("division by zero");
  // extended Euclid on (value, modulus)
  std::int64_t a = value_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, modulus_);
}

ModP& ModP::operator+=(const ModP& rhs) {
  std::uint64_t s = std::uint64_t{value_} + rhs.value_;
  if (s >= modulus_) s -= modulus_;
  value_ = static_cast<std::uint32_t>(s);
  return *this;
}

ModP& ModP::operator-=(const ModP& rhs) {
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_);
  return *this;
}

ModP& ModP::operator*=(const ModP& rhs) {
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * rhs.value_) % modulus_);
  return *this;
}

ModP operator-(const ModP& a) {
  ModP r;
  r.modulus_ = a.modulus_;
  r.value_ = a.value_ == 0 ? 0 : a.modulus_ - a.value_;
  return r;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw DomainError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

ModP PrimeField::parse(std::string_view text) const {
  auto [num, den] = split_fraction(text);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw DomainError("malformed scalar literal '" + std::string(text) + "'");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  mpz_class pz(p_);
  mpz_class nr, dr;
  mpz_fdiv_r(nr.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  mpz_fdiv_r(dr.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  if (dr == 0) {
    throw DomainError("scalar literal '" + std::string(text) + "' has a denominator divisible by " +
                                std::to_string(p_));
  }
  return ModP(static_cast<std::int64_t>(nr.get_ui()), p_) / ModP(static_cast<std::int64_t>(dr.get_ui()), p_);
}

}  // namespace sheafres
