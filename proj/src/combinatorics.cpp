#include "angtensor/combinatorics.hpp"

#include <cmath>
#include <sstream>

namespace angtensor {

BigInt factorial(int k) {
  if (k < 0) throw domain_error("factorial: k must be >= 0, got " + std::to_string(k));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt double_factorial(int k) {
  if (k < -1) throw domain_error("double_factorial: k must be >= -1, got " + std::to_string(k));
  if (k <= 0) return 1;  // (-1)!! = 0!! = 1
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw domain_error("binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

double PiScaled::to_double() const {
  PiScaled f = folded();
  if (f.i_power != 0 && !f.is_zero())
    throw domain_error("PiScaled::to_double: value is imaginary");
  return f.value.to_double() * std::pow(M_PI, f.pi_power);
}

std::string PiScaled::str() const {
  PiScaled f = folded();
  if (f.is_zero()) return "0";
  std::ostringstream os;
  if (f.i_power == 1) os << "i*";
  os << f.value.str();
  if (f.pi_power != 0) {
    os << " pi";
    if (f.pi_power != 1) os << "^" << f.pi_power;
  }
  return os.str();
}

namespace {

// Gamma(m + 1/2) = (2m-1)!!/2^m * sqrt(pi) for integer m >= 0; the sqrt(pi)
// is tracked by the caller.
Rational gamma_half_rational_part(int m) {
  return Rational(double_factorial(2 * m - 1)) / Rational::pow2(m);
}

}  // namespace

PiScaled chi(int n, int ell) {
  if (ell < 0) throw domain_error("chi: ell must be >= 0, got " + std::to_string(ell));
  if (n >= ell) throw transform_error(RadialErrorKind::divergent, n, ell);
  if (n <= -(ell + 3)) throw transform_error(RadialErrorKind::not_integrable, n, ell);

  if ((ell - n) % 2 == 0) {
    // Numerator Gamma((ell+3+n)/2) is half-integer, denominator is integer:
    // chi = 2^(n+1) * pi * (2m-1)!!/2^m / (k-1)!  with m=(ell+n+2)/2, k=(ell-n)/2.
    int m = (ell + n + 2) / 2;
    int k = (ell - n) / 2;
    Rational v = Rational::pow2(n + 1) * gamma_half_rational_part(m) / Rational(factorial(k - 1));
    return PiScaled(v, 1, 0);
  }
  // Numerator is integer, denominator Gamma((ell-n)/2) is half-integer:
  // the two sqrt(pi) cancel and chi is purely rational.
  int k = (ell + 3 + n) / 2;
  int m = (ell - n - 1) / 2;
  Rational v = Rational::pow2(n + 1) * Rational(factorial(k - 1)) / gamma_half_rational_part(m);
  return PiScaled(v, 0, 0);
}

namespace {

void require_component_args(const char* who, int L, int ell, int n) {
  if (L < 0 || ell < 0 || n < 0)
    throw domain_error(std::string(who) + ": arguments must be non-negative");
  if (n > ell || ell > L)
    throw domain_error(std::string(who) + ": need 0 <= n <= ell <= L, got L=" +
                       std::to_string(L) + " ell=" + std::to_string(ell) +
                       " n=" + std::to_string(n));
  if ((L - ell) % 2 != 0)
    throw domain_error(std::string(who) + ": L-ell must be even");
  if ((ell - n) % 2 != 0)
    throw domain_error(std::string(who) + ": ell-n must be even");
}

}  // namespace

Rational decomp_coefficient(int L, int ell, int n) {
  require_component_args("decomp_coefficient", L, ell, n);
  Rational prefactor =
      Rational(BigInt(2 * ell + 1) * double_factorial(L - ell - 1)) /
      Rational(factorial(L - ell) * double_factorial(L + ell + 1));
  Rational term = Rational(factorial(L - n) * double_factorial(ell + n - 1) *
                           double_factorial(ell - n - 1)) /
                  Rational(factorial(ell - n) * double_factorial(L - n - 1));
  if (((ell - n) / 2) % 2 != 0) term = -term;
  return prefactor * term;
}

Rational max_component_coefficient(int L, int n) {
  if (L < 0 || n < 0)
    throw domain_error("max_component_coefficient: arguments must be non-negative");
  if (n > L) throw domain_error("max_component_coefficient: need n <= L");
  if ((L - n) % 2 != 0) throw domain_error("max_component_coefficient: L-n must be even");
  Rational r = Rational(double_factorial(L + n - 1)) / Rational(double_factorial(2 * L - 1));
  if (((L - n) / 2) % 2 != 0) r = -r;
  return r;
}

Rational kappa(int L, int ell, int N, int n) {
  if (L < 0 || ell < 0 || N < 0 || n < 0)
    throw domain_error("kappa: arguments must be non-negative");
  if (ell > L || n > N) throw domain_error("kappa: need ell <= L and n <= N");
  if ((L - ell) % 2 != 0 || (N - n) % 2 != 0)
    throw domain_error("kappa: L-ell and N-n must be even");
  return Rational(binomial(L + N - ell - n, L - ell) * binomial(ell + n, ell) *
                  double_factorial(L - ell - 1) * double_factorial(N - n - 1)) /
         Rational(double_factorial(L + N - ell - n - 1));
}

}  // namespace angtensor
