#pragma once

#include <stdexcept>
#include <string>

namespace angtensor {

// Precondition violations (bad rank, parity mismatch, out-of-range argument).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Runtime validation failures (non-unit vector, insufficient quadrature degree).
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The two distinct ways a radial integral can fail to exist.
enum class RadialErrorKind {
  divergent,       // n >= ell + 1: the integral grows without bound
  not_integrable,  // n <= -(ell + 3): too singular at the origin
};

inline const char* radial_error_name(RadialErrorKind k) {
  return k == RadialErrorKind::divergent ? "divergent" : "not integrable";
}

class transform_error : public std::domain_error {
public:
  transform_error(RadialErrorKind kind, int power, int ell)
      : std::domain_error(std::string(radial_error_name(kind)) + ": p^" +
                          std::to_string(power) + " on the ell=" +
                          std::to_string(ell) + " channel"),
        kind_(kind), power_(power), ell_(ell) {}

  RadialErrorKind kind() const { return kind_; }
  int power() const { return power_; }
  int ell() const { return ell_; }

private:
  RadialErrorKind kind_;
  int power_;
  int ell_;
};

}  // namespace angtensor
