#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sll {

/// Largest modulus accepted for prime fields; eigenvalue search scans every residue.
inline constexpr std::uint32_t kMaxPrime = 65521;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base field: the rationals (modulus 0) or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws FieldError unless p is a prime not exceeding kMaxPrime.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "Fp:p".
  static Field parse(std::string_view text);

  [[nodiscard]] constexpr bool is_rational() const { return modulus_ == 0; }
  [[nodiscard]] constexpr std::uint32_t modulus() const { return modulus_; }
  [[nodiscard]] constexpr std::uint32_t characteristic() const { return modulus_; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint32_t n);

/// Exact field element.
///
/// Over Q the value is a canonical fraction; over F_p it is the residue in
/// [0, p) stored with denominator 1. A scalar built from a plain integer
/// carries no modulus and adopts the modulus of the first F_p operand it is
/// combined with, so literals such as 0 and 1 work in every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Field field, const mpq_class& v);
  Scalar(Field field, long v) : Scalar(field, mpq_class(v)) {}

  /// Parses "n" or "n/d" into the given field. Throws FieldError.
  static Scalar parse(Field field, std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] std::uint32_t modulus() const { return modulus_; }
  [[nodiscard]] const mpq_class& rational() const { return value_; }
  [[nodiscard]] std::string to_string() const;

  /// Re-reads this value in another field (rationals reduce modulo p).
  [[nodiscard]] Scalar in(Field field) const { return Scalar(field, value_); }

  [[nodiscard]] Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  /// Total order: numeric over Q, by residue over F_p.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void adopt(const Scalar& o);
  void reduce();

  mpq_class value_;
  std::uint32_t modulus_ = 0;
};

}  // namespace sll
