#include "angtensor/poly3.hpp"

#include <cmath>
#include <sstream>

namespace angtensor {

Poly3 Poly3::monomial(const Exponents& e, Rational coeff) {
  Poly3 p;
  p.add_term(e, coeff);
  return p;
}

Poly3 Poly3::variable(int axis) {
  if (axis < 0 || axis > 2) throw domain_error("Poly3::variable: axis must be 0..2");
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(axis)] = 1;
  return monomial(e);
}

Poly3 Poly3::radius_squared_power(int k) {
  if (k < 0) throw domain_error("Poly3::radius_squared_power: k must be >= 0");
  Poly3 r2;
  for (int ax = 0; ax < 3; ++ax) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(ax)] = 2;
    r2.add_term(e, Rational(1));
  }
  Poly3 out = constant(Rational(1));
  for (int i = 0; i < k; ++i) out = out * r2;
  return out;
}

int Poly3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

std::optional<int> Poly3::homogeneity_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int t = e[0] + e[1] + e[2];
    if (!d) d = t;
    else if (*d != t) return std::nullopt;
  }
  return d;
}

void Poly3::add_term(const Exponents& e, const Rational& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw domain_error("Poly3::add_term: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Poly3 Poly3::derivative(int axis) const {
  if (axis < 0 || axis > 2) throw domain_error("Poly3::derivative: axis must be 0..2");
  const auto ax = static_cast<std::size_t>(axis);
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    if (e[ax] == 0) continue;
    Exponents d = e;
    --d[ax];
    out.add_term(d, c * Rational(e[ax]));
  }
  return out;
}

Poly3 Poly3::laplacian() const {
  Poly3 out;
  for (int ax = 0; ax < 3; ++ax) out += derivative(ax).derivative(ax);
  return out;
}

double Poly3::eval(const std::array<double, 3>& x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.to_double() * std::pow(x[0], e[0]) * std::pow(x[1], e[1]) * std::pow(x[2], e[2]);
  return sum;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    const char* names[3] = {"x", "y", "z"};
    for (int ax = 0; ax < 3; ++ax) {
      if (e[static_cast<std::size_t>(ax)] == 0) continue;
      os << "*" << names[ax];
      if (e[static_cast<std::size_t>(ax)] > 1) os << "^" << e[static_cast<std::size_t>(ax)];
    }
  }
  return os.str();
}

}  // namespace angtensor
