#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "angtensor/errors.hpp"

namespace angtensor {

using BigInt = mpz_class;

/// Exact fraction over arbitrary-precision integers. Always stored reduced
/// with a positive denominator, so equality is structural.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, Rational(3) reads naturally
  Rational(BigInt n) : q_(std::move(n)) {}
  Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}
  Rational(const BigInt& n, const BigInt& d) : q_(n, d) {
    if (sgn(d) == 0) throw domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  /// Parses "p/q" or "p" (the CLI wire format).
  static Rational parse(const std::string& s) {
    mpq_class q;
    try {
      q = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw domain_error("Rational: cannot parse '" + s + "'");
    }
    if (sgn(q.get_den()) == 0) throw domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return wrap(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Integer power; negative exponents invert (error on zero base).
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw domain_error("Rational: 0 to a negative power");
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), k);
    return invert ? Rational(d, n) : Rational(n, d);
  }

  /// Exact 2^e for any integer e.
  static Rational pow2(long e) { return Rational(2).pow(e); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;  // kept canonical: GMP mpq arithmetic preserves canonical form
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace angtensor
