#include "angtensor/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace angtensor {

std::vector<MultiIndex> multi_indices(int rank) {
  if (rank < 0) throw domain_error("multi_indices: rank must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(multi_index_count(rank));
  for (int a = 0; a <= rank; ++a)
    for (int b = 0; b <= rank - a; ++b)
      out.push_back(MultiIndex{{a, b, rank - a - b}});
  return out;
}

std::size_t multi_index_offset(int rank, const MultiIndex& m) {
  const auto [a, b, c] = m.e;
  if (a < 0 || b < 0 || c < 0 || a + b + c != rank)
    throw domain_error("multi_index_offset: triple does not match rank");
  // Triples sorted lexicographically by (a, b); for fixed a there are
  // rank - a + 1 values of b.
  return static_cast<std::size_t>(a * (rank + 1) - a * (a - 1) / 2 + b);
}

BigInt multi_index_multiplicity(const MultiIndex& m) {
  return factorial(m.rank()) / (factorial(m.e[0]) * factorial(m.e[1]) * factorial(m.e[2]));
}

namespace {

void require_x_args(const char* who, int L, int n) {
  if (L < 0 || n < 0) throw domain_error(std::string(who) + ": arguments must be non-negative");
  if (n > L) throw domain_error(std::string(who) + ": need n <= L");
  if ((L - n) % 2 != 0) throw domain_error(std::string(who) + ": L-n must be even");
}

// All perfect pairings of `free`, always pairing its first element first.
void enumerate_pairings(std::vector<int>& free, std::vector<std::pair<int, int>>& current,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free.empty()) {
    out.push_back(current);
    return;
  }
  const int first = free.front();
  for (std::size_t j = 1; j < free.size(); ++j) {
    const int partner = free[j];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t k = 1; k < free.size(); ++k)
      if (k != j) rest.push_back(free[k]);
    current.emplace_back(first, partner);
    enumerate_pairings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

BigInt x_term_count(int L, int n) {
  require_x_args("x_term_count", L, n);
  return binomial(L, n) * double_factorial(L - n - 1);
}

std::vector<XTerm> enumerate_x_terms(int L, int n) {
  require_x_args("enumerate_x_terms", L, n);
  std::vector<XTerm> out;
  detail::for_each_subset(L, n, [&](std::span<const int> units) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(L - n));
    std::size_t ui = 0;
    for (int pos = 0; pos < L; ++pos) {
      if (ui < units.size() && units[ui] == pos) ++ui;
      else rest.push_back(pos);
    }
    std::vector<std::vector<std::pair<int, int>>> pairings;
    std::vector<std::pair<int, int>> scratch;
    enumerate_pairings(rest, scratch, pairings);
    for (auto& p : pairings)
      out.push_back(XTerm{std::vector<int>(units.begin(), units.end()), std::move(p)});
  });
  return out;
}

namespace detail {

void validate_unit(const std::array<double, 3>& u) {
  const double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  if (std::abs(norm - 1.0) > 1e-12)
    throw validation_error("evaluate_x: |u| must be 1 within 1e-12, got |u| = " +
                           std::to_string(norm));
}

void validate_unit(const std::array<Rational, 3>& u) {
  if (u[0] * u[0] + u[1] * u[1] + u[2] * u[2] != Rational(1))
    throw validation_error("evaluate_x: rational u must satisfy |u|^2 == 1 exactly");
}

}  // namespace detail

XCombo::XCombo(int rank) : rank_(rank) {
  if (rank < 0) throw domain_error("XCombo: rank must be >= 0");
}

XCombo XCombo::monomial(int rank) {
  XCombo c(rank);
  c.add_term(rank, Rational(1));
  return c;
}

Rational XCombo::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void XCombo::add_term(int n, const Rational& c) {
  if (n < 0 || n > rank_)
    throw domain_error("XCombo::add_term: key " + std::to_string(n) + " outside [0, rank]");
  if ((rank_ - n) % 2 != 0)
    throw domain_error("XCombo::add_term: key " + std::to_string(n) +
                       " has wrong parity for rank " + std::to_string(rank_));
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

XCombo& XCombo::operator+=(const XCombo& o) {
  if (rank_ != o.rank_) throw domain_error("XCombo: rank mismatch in +=");
  for (const auto& [n, c] : o.coeffs_) add_term(n, c);
  return *this;
}

XCombo& XCombo::operator-=(const XCombo& o) {
  if (rank_ != o.rank_) throw domain_error("XCombo: rank mismatch in -=");
  for (const auto& [n, c] : o.coeffs_) add_term(n, -c);
  return *this;
}

XCombo& XCombo::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [n, c] : coeffs_) c *= s;
  return *this;
}

XCombo combo_contract_vector(const XCombo& c) {
  if (c.rank() < 1) throw domain_error("combo_contract_vector: rank must be >= 1");
  XCombo out(c.rank() - 1);
  for (const auto& [n, coeff] : c.coeffs()) {
    if (n + 1 <= out.rank()) out.add_term(n + 1, Rational(n + 1) * coeff);
    if (n - 1 >= 0) out.add_term(n - 1, coeff);
  }
  return out;
}

XCombo combo_trace(const XCombo& c) {
  if (c.rank() < 2) throw domain_error("combo_trace: rank must be >= 2");
  XCombo out(c.rank() - 2);
  for (const auto& [n, coeff] : c.coeffs()) {
    if (n <= out.rank()) out.add_term(n, Rational(c.rank() + n + 1) * coeff);
    if (n - 2 >= 0) out.add_term(n - 2, coeff);
  }
  return out;
}

XCombo combo_multiply_sym(const XCombo& a, const XCombo& b) {
  XCombo out(a.rank() + b.rank());
  for (const auto& [l, ca] : a.coeffs())
    for (const auto& [n, cb] : b.coeffs())
      out.add_term(l + n, ca * cb * kappa(a.rank(), l, b.rank(), n));
  return out;
}

}  // namespace angtensor
