#pragma once

// Ground fields: GF(p) for a prime p < 2^31, or the rationals.
// Scalars carry canonical representatives (0 <= e < p, normalized fractions),
// so scalar equality is plain value equality.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "homcat/rational.hpp"

namespace homcat {

enum class FieldKind { prime_field, rationals };

using Scalar = std::variant<std::int64_t, Rational>;

class FieldSpec {
 public:
  static FieldSpec gf(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw std::invalid_argument("field: characteristic out of range");
    if (!is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
    FieldSpec f;
    f.kind_ = FieldKind::prime_field;
    f.p_ = p;
    return f;
  }

  static FieldSpec rationals() {
    FieldSpec f;
    f.kind_ = FieldKind::rationals;
    return f;
  }

  FieldKind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }

  Scalar from_int(long long v) const {
    if (kind_ == FieldKind::prime_field) {
      std::int64_t r = static_cast<std::int64_t>(v % p_);
      if (r < 0) r += p_;
      return Scalar(r);
    }
    return Scalar(Rational(v));
  }

  bool is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::prime_field) return std::get<std::int64_t>(a) == 0;
    return std::get<Rational>(a).is_zero();
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime_field)
      return Scalar((std::get<std::int64_t>(a) + std::get<std::int64_t>(b)) % p_);
    return Scalar(std::get<Rational>(a) + std::get<Rational>(b));
  }

  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime_field) {
      std::int64_t r = (std::get<std::int64_t>(a) - std::get<std::int64_t>(b)) % p_;
      if (r < 0) r += p_;
      return Scalar(r);
    }
    return Scalar(std::get<Rational>(a) - std::get<Rational>(b));
  }

  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime_field)
      return Scalar((std::get<std::int64_t>(a) * std::get<std::int64_t>(b)) % p_);
    return Scalar(std::get<Rational>(a) * std::get<Rational>(b));
  }

  Scalar neg(const Scalar& a) const { return sub(zero(), a); }

  Scalar inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("field: inverse of zero");
    if (kind_ == FieldKind::prime_field) {
      // Extended Euclid.
      std::int64_t t = 0, new_t = 1, r = p_, new_r = std::get<std::int64_t>(a);
      while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
      }
      if (t < 0) t += p_;
      return Scalar(t);
    }
    const Rational& q = std::get<Rational>(a);
    return Scalar(Rational(1) / q);
  }

  std::string to_string(const Scalar& a) const {
    if (kind_ == FieldKind::prime_field) return std::to_string(std::get<std::int64_t>(a));
    return std::get<Rational>(a).to_string();
  }

  Scalar parse(std::string_view s) const {
    if (kind_ == FieldKind::prime_field) {
      Rational q = Rational::from_string(s);
      if (q.den() != BigInt(1)) throw std::invalid_argument("field: fraction in prime-field scalar");
      // Reduce through BigInt so arbitrarily long literals stay exact.
      BigInt rem = q.num() % BigInt(p_);
      std::int64_t r = 0;
      Rational rr(rem, BigInt(1));
      std::string dec = rr.to_string();
      r = std::stoll(dec);
      if (r < 0) r += p_;
      return Scalar(r);
    }
    return Scalar(Rational::from_string(s));
  }

 private:
  FieldKind kind_ = FieldKind::prime_field;
  std::int64_t p_ = 2;

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
};

inline bool scalar_equal(const Scalar& a, const Scalar& b) { return a == b; }

}  // namespace homcat
