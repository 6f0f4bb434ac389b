#include "angtensor/decomposition.hpp"

#include <map>

namespace angtensor {

namespace {

void require_nonnegative(const char* who, int L, int ell) {
  if (L < 0 || ell < 0)
    throw domain_error(std::string(who) + ": arguments must be non-negative");
}

bool is_vanishing(int L, int ell) { return ell > L || (L - ell) % 2 != 0; }

}  // namespace

XCombo component(int L, int ell) {
  require_nonnegative("component", L, ell);
  XCombo out(L);
  if (is_vanishing(L, ell)) return out;
  for (int n = ell; n >= 0; n -= 2) out.add_term(n, decomp_coefficient(L, ell, n));
  return out;
}

XCombo max_component(int L) {
  if (L < 0) throw domain_error("max_component: L must be >= 0");
  XCombo out(L);
  for (int n = L; n >= 0; n -= 2) out.add_term(n, max_component_coefficient(L, n));
  return out;
}

namespace {

const XCombo& recursion_impl(int L, int ell, std::map<std::pair<int, int>, XCombo>& cache) {
  auto key = std::make_pair(L, ell);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  XCombo result(L);
  if (ell == 0) {
    result.add_term(0, Rational(1) / Rational(double_factorial(L + 1)));
  } else if (ell == 1) {
    result.add_term(1, Rational(3) / Rational(double_factorial(L + 2)));
  } else {
    // (p^L)_ell = (2l+1)/l * [ (p^{L+1})_{l-1} . p  -  (l-1)/(2l-3) (p^L)_{l-2} ]
    XCombo first = combo_contract_vector(recursion_impl(L + 1, ell - 1, cache));
    XCombo second = recursion_impl(L, ell - 2, cache);
    second *= Rational(ell - 1, 2 * ell - 3);
    result = first - second;
    result *= Rational(2 * ell + 1, ell);
  }
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

XCombo component_via_recursion(int L, int ell) {
  require_nonnegative("component_via_recursion", L, ell);
  if (is_vanishing(L, ell)) return XCombo(L);
  std::map<std::pair<int, int>, XCombo> cache;  // per-invocation, no shared state
  return recursion_impl(L, ell, cache);
}

XCombo component_via_product(int L, int ell) {
  require_nonnegative("component_via_product", L, ell);
  if (is_vanishing(L, ell)) return XCombo(L);
  XCombo product = combo_multiply_sym(max_component(ell), component(L - ell, 0));
  product *= Rational(double_factorial(2 * ell + 1) * double_factorial(L - ell + 1)) /
             Rational(double_factorial(L + ell + 1));
  return product;
}

std::vector<std::pair<int, XCombo>> all_components(int L) {
  if (L < 0) throw domain_error("all_components: L must be >= 0");
  std::vector<std::pair<int, XCombo>> out;
  for (int ell = L; ell >= 0; ell -= 2) out.emplace_back(ell, component(L, ell));
  return out;
}

bool check_traceless(const XCombo& c) {
  if (c.rank() < 2) throw domain_error("check_traceless: rank must be >= 2");
  return combo_trace(c).is_zero();
}

}  // namespace angtensor
