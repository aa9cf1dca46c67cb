#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "brim/errors.hpp"

namespace brim {

// Exact rational number. Always in lowest terms with positive
// denominator (mpq_class maintains that canonical form for us).
class Rational {
public:
  // Field-context type; the rationals need no runtime data, but the
  // prime field does, and generic code carries one for either.
  struct Context {
    bool operator==(const Context&) const = default;
  };

  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalar literals
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
  }

  static Rational from_int(std::int64_t n, const Context&) {
    return Rational(static_cast<long>(n));
  }
  static Rational fraction(std::int64_t num, std::int64_t den, const Context&) {
    return Rational(static_cast<long>(num), static_cast<long>(den));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  Rational inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

inline Rational factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f, mpz_class(1));
}

}  // namespace brim
