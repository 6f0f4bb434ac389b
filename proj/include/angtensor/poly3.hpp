#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "angtensor/rational.hpp"

namespace angtensor {

/// Sparse polynomial in three variables with exact rational coefficients.
/// Supports differentiation and the Laplacian exactly.
class Poly3 {
public:
  using Exponents = std::array<int, 3>;

  Poly3() = default;

  static Poly3 monomial(const Exponents& e, Rational coeff = Rational(1));
  static Poly3 constant(Rational c) { return monomial({0, 0, 0}, std::move(c)); }

  /// x_axis as a degree-1 polynomial.
  static Poly3 variable(int axis);

  /// (x1^2 + x2^2 + x3^2)^k.
  static Poly3 radius_squared_power(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Total degree of the highest monomial; -1 for the zero polynomial.
  int degree() const;

  /// Common total degree of all monomials, when the polynomial is
  /// homogeneous; nullopt otherwise (zero polynomial reports 0... no term).
  std::optional<int> homogeneity_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& s);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& s) { return a *= s; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);

  bool operator==(const Poly3&) const = default;

  Poly3 derivative(int axis) const;
  Poly3 laplacian() const;

  double eval(const std::array<double, 3>& x) const;

  std::string str() const;  // debugging aid

private:
  std::map<Exponents, Rational> terms_;  // exponents -> nonzero coefficient
};

}  // namespace angtensor
