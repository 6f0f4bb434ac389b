#pragma once

#include <string>

#include "angtensor/rational.hpp"

namespace angtensor {

/// k! for k >= 0.
BigInt factorial(int k);

/// k!! = k(k-2)(k-4)... with the empty-product conventions (-1)!! = 0!! = 1.
/// k < -1 is a domain error.
BigInt double_factorial(int k);

/// n choose k, 0 <= k <= n.
BigInt binomial(int n, int k);

/// An exact value of the form  value * pi^pi_power * i^i_power.
///
/// i_power is stored mod 4 (i^4 = 1); it is *not* folded through i^2 = -1,
/// so a transform channel can carry i_power == ell mod 4 verbatim. Equality
/// folds the phase into the sign, i.e. compares mathematical values.
struct PiScaled {
  Rational value;
  int pi_power = 0;
  int i_power = 0;  // in {0,1,2,3}

  PiScaled() = default;
  PiScaled(Rational v, int pi_pow = 0, int i_pow = 0)
      : value(std::move(v)), pi_power(pi_pow), i_power(((i_pow % 4) + 4) % 4) {
    if (value.is_zero()) {
      pi_power = 0;
      i_power = 0;
    }
  }

  bool is_zero() const { return value.is_zero(); }

  /// Equivalent form with i_power in {0,1}: i^2 absorbed as a sign flip.
  PiScaled folded() const {
    PiScaled f = *this;
    if (f.i_power >= 2) {
      f.value = -f.value;
      f.i_power -= 2;
    }
    return f;
  }

  bool is_real() const { return folded().i_power == 0 || is_zero(); }

  PiScaled& operator*=(const PiScaled& o) {
    value *= o.value;
    if (value.is_zero()) {
      pi_power = 0;
      i_power = 0;
    } else {
      pi_power += o.pi_power;
      i_power = (i_power + o.i_power) % 4;
    }
    return *this;
  }
  friend PiScaled operator*(PiScaled a, const PiScaled& b) { return a *= b; }
  PiScaled operator-() const { return PiScaled(-value, pi_power, i_power); }

  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    PiScaled fa = a.folded(), fb = b.folded();
    return fa.value == fb.value && fa.pi_power == fb.pi_power && fa.i_power == fb.i_power;
  }
  friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

  /// Real part as a double (error if the folded phase is imaginary).
  double to_double() const;

  /// Human form, e.g. "pi/2", "-3/4 pi^-1", folded phase. See render.hpp for
  /// the CLI's merged fraction layout.
  std::string str() const;
};

/// Radial transform constant chi_{n,ell} = 2^(n+1) sqrt(pi)
/// Gamma((ell+3+n)/2) / Gamma((ell-n)/2), defined for integer n in the open
/// window -(ell+3) < n < ell. The two Gamma arguments always have opposite
/// integer/half-integer character, so the result is exactly rational times
/// pi when ell-n is even and purely rational when ell-n is odd.
///
/// Outside the window throws transform_error: "divergent" for n >= ell,
/// "not integrable" for n <= -(ell+3).
PiScaled chi(int n, int ell);

/// Coefficient of X^{L,n} in the angular-momentum-ell component of the
/// rank-L unit-vector monomial:
///   (2ell+1)(L-ell-1)!! / ((L-ell)! (L+ell+1)!!)
///   * (-1)^((ell-n)/2) (L-n)! (ell+n-1)!! (ell-n-1)!! / ((ell-n)! (L-n-1)!!)
/// Requires 0 <= n <= ell <= L with L-ell and ell-n even.
Rational decomp_coefficient(int L, int ell, int n);

/// Coefficient of X^{L,n} in the maximal (ell = L, traceless) component:
/// (-1)^((L-n)/2) (L+n-1)!! / (2L-1)!!. Equals decomp_coefficient(L, L, n).
Rational max_component_coefficient(int L, int n);

/// Term-count ratio for the symmetrized product of X^{L,ell} and X^{N,n}:
/// binom(L+N-ell-n, L-ell) binom(ell+n, ell) (L-ell-1)!!(N-n-1)!! / (L+N-ell-n-1)!!
Rational kappa(int L, int ell, int N, int n);

}  // namespace angtensor
