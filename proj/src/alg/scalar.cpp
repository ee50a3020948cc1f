#include "relspan/alg/scalar.hpp"

#include "relspan/error.hpp"

#include <charconv>
#include <limits>

namespace relspan::alg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(long long value, std::uint64_t p) {
  long long m = value % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class m = value % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw Error(Errc::NotAPrime, "field characteristic " + std::to_string(p) + " is not a prime below 2^32");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:"))
    digits = text.substr(3);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  else
    throw Error(Errc::ParseError, "unknown field '" + std::string(text) + "'");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(Errc::ParseError, "bad field characteristic in '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Scalar::from_int(Field field, long long value) {
  Scalar s(field);
  if (field.is_rational())
    s.q_ = static_cast<long>(value);
  else
    s.r_ = reduce(value, field.characteristic());
  return s;
}

Scalar Scalar::from_fraction(Field field, long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  return from_int(field, num) / from_int(field, den);
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  std::string str(text);
  if (str.empty() || q.set_str(str, 10) != 0) throw Error(Errc::ParseError, "bad scalar '" + str + "'");
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + str + "'");
  q.canonicalize();
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = q;
  } else {
    const std::uint64_t p = field.characteristic();
    const std::uint64_t den = reduce(q.get_den(), p);
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator of '" + str + "' vanishes mod " + std::to_string(p));
    s.r_ = reduce(q.get_num(), p) * pow_mod(den, p - 2, p) % p;
  }
  return s;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw Error(Errc::FieldMismatch, "scalars over " + field_.name() + " and " + other.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    s.r_ = pow_mod(r_, p - 2, p);
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ += rhs.q_;
  else
    r_ = (r_ + rhs.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ -= rhs.q_;
  else
    r_ = (r_ + field_.characteristic() - rhs.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ *= rhs.q_;
  else
    r_ = r_ * rhs.r_ % field_.characteristic();
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (field_.is_rational()) {
    q_ += a.q_ * b.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = (r_ + a.r_ * b.r_ % p) % p;
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

}  // namespace relspan::alg
