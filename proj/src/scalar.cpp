#include "sll/scalar.hpp"

#include <charconv>

namespace sll {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw FieldError("modulus " + std::to_string(p) + " exceeds the supported bound " +
                     std::to_string(kMaxPrime));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint32_t p = 0;
    const auto digits = text.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw FieldError("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected Q or Fp:p)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, const mpq_class& v) : value_(v), modulus_(field.modulus()) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(Field field, std::string_view text) {
  const auto bad = [&] { return FieldError("malformed scalar '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto check_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw bad();
    }
  };
  mpq_class q;
  if (slash == std::string_view::npos) {
    check_int(text);
    q = mpz_class(std::string(text[0] == '+' ? text.substr(1) : text));
  } else {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (den[0] == '-' || den[0] == '+') throw bad();
    const mpz_class d(std::string{den});
    if (d == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num[0] == '+' ? num.substr(1) : num)), d);
    q.canonicalize();
  }
  if (!field.is_rational()) {
    const mpz_class p(field.modulus());
    if (mpz_class(q.get_den() % p) == 0) {
      throw FieldError("denominator of '" + std::string(text) + "' vanishes modulo " +
                       std::to_string(field.modulus()));
    }
  }
  return Scalar(field, q);
}

std::string Scalar::to_string() const { return value_.get_str(); }

void Scalar::adopt(const Scalar& o) {
  if (modulus_ == o.modulus_ || o.modulus_ == 0) return;
  if (modulus_ != 0) {
    throw FieldError("mixing scalars from F_" + std::to_string(modulus_) + " and F_" +
                     std::to_string(o.modulus_));
  }
  modulus_ = o.modulus_;
  reduce();
}

void Scalar::reduce() {
  if (modulus_ == 0) return;
  const mpz_class p(modulus_);
  mpz_class num = value_.get_num() % p;
  if (num < 0) num += p;
  if (value_.get_den() != 1) {
    mpz_class den = value_.get_den() % p;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw FieldError("denominator not invertible modulo " + std::to_string(modulus_));
    }
    num = (num * inv) % p;
  }
  value_ = mpq_class(num);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
    r.value_.canonicalize();
  } else {
    const mpz_class p(modulus_);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(o);
  value_ += o.value_;
  if (modulus_ != 0) {
    if (value_ >= modulus_) value_ -= modulus_;
    // o may be an unreduced literal
    if (value_ < 0 || value_ >= modulus_ || value_.get_den() != 1) reduce();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt(o);
  value_ -= o.value_;
  if (modulus_ != 0) {
    if (value_ < 0) value_ += modulus_;
    if (value_ < 0 || value_ >= modulus_ || value_.get_den() != 1) reduce();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt(o);
  value_ *= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  adopt(o);
  Scalar inv = o;
  inv.adopt(*this);
  return *this *= inv.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

}  // namespace sll
