#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace relspan::alg {

/// Ground field: the rationals, or the residues modulo a prime below 2^32.
class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field{}; }
  static Field prime(std::uint64_t p);
  // Accepts "Q", "Fp:<p>" or "F<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field) : field_(field) {}

  static Scalar from_int(Field field, long long value);
  static Scalar from_fraction(Field field, long long num, long long den);
  // Parses "a", "-a" or "a/b".
  static Scalar parse(Field field, std::string_view text);
  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return from_int(field, 1); }

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return field_.is_rational() ? q_ == 1 : r_ == 1; }

  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }
  // this += a * b
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace relspan::alg
