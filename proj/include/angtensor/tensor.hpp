#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "angtensor/combinatorics.hpp"
#include "angtensor/rational.hpp"

namespace angtensor {

/// Exponent triple (a,b,c): how many of a symmetric tensor's indices point
/// along each Cartesian axis. a+b+c is the tensor rank.
struct MultiIndex {
  std::array<int, 3> e{0, 0, 0};

  int rank() const { return e[0] + e[1] + e[2]; }
  auto operator<=>(const MultiIndex&) const = default;

  /// Counts axis occurrences in a concrete Cartesian index list (entries 0..2).
  static MultiIndex from_cartesian(std::span<const int> idx) {
    MultiIndex m;
    for (int ax : idx) ++m.e[static_cast<std::size_t>(ax)];
    return m;
  }
};

/// All exponent triples of the given rank in lexicographic order.
std::vector<MultiIndex> multi_indices(int rank);

/// Position of a triple in the lexicographic enumeration.
std::size_t multi_index_offset(int rank, const MultiIndex& m);

/// Number of distinct triples of a rank: (rank+1)(rank+2)/2.
inline std::size_t multi_index_count(int rank) {
  return static_cast<std::size_t>((rank + 1) * (rank + 2) / 2);
}

/// L! / (a! b! c!): how many Cartesian index strings realize a triple.
BigInt multi_index_multiplicity(const MultiIndex& m);

namespace detail {
template <class Scalar>
Scalar scalar_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) return r;
  else return static_cast<Scalar>(r.to_double());
}
template <class Scalar>
Scalar scalar_from_bigint(const BigInt& z) {
  if constexpr (std::is_same_v<Scalar, Rational>) return Rational(z);
  else return z.get_d();
}
}  // namespace detail

/// Dense fully symmetric rank-L tensor over 3 dimensions, one entry per
/// exponent triple. Scalar is Rational (exact) or double (numeric).
template <class Scalar>
class SymTensor {
public:
  explicit SymTensor(int rank) : rank_(rank), comps_(multi_index_count(rank), Scalar{}) {}

  int rank() const { return rank_; }
  std::size_t size() const { return comps_.size(); }

  Scalar& at(const MultiIndex& m) { return comps_[multi_index_offset(rank_, m)]; }
  const Scalar& at(const MultiIndex& m) const { return comps_[multi_index_offset(rank_, m)]; }
  Scalar& at(int a, int b, int c) { return at(MultiIndex{{a, b, c}}); }
  const Scalar& at(int a, int b, int c) const { return at(MultiIndex{{a, b, c}}); }

  /// Value at a concrete Cartesian realization, e.g. {2,2,0} for T_zzx.
  const Scalar& value_at(std::span<const int> cartesian) const {
    return at(MultiIndex::from_cartesian(cartesian));
  }

  std::span<Scalar> components() { return comps_; }
  std::span<const Scalar> components() const { return comps_; }

  SymTensor& operator+=(const SymTensor& o) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
  }
  SymTensor& operator-=(const SymTensor& o) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
  }
  SymTensor& operator*=(const Scalar& s) {
    for (auto& c : comps_) c *= s;
    return *this;
  }
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }

  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.rank_ == b.rank_ && a.comps_ == b.comps_;
  }

  /// Largest |component|.
  double max_abs() const {
    double m = 0.0;
    for (const auto& c : comps_) {
      double v;
      if constexpr (std::is_same_v<Scalar, Rational>) v = std::abs(c.to_double());
      else v = std::abs(c);
      if (v > m) m = v;
    }
    return m;
  }

private:
  int rank_;
  std::vector<Scalar> comps_;
};

/// One term of an expanded X symbol: which positions carry unit vectors and
/// how the remaining positions pair up into Kronecker deltas.
struct XTerm {
  std::vector<int> unit_positions;              // ascending
  std::vector<std::pair<int, int>> delta_pairs; // each (lo, hi), lowest-first order

  bool operator==(const XTerm&) const = default;
};

/// binom(L, n) * (L-n-1)!!, the number of distinct terms in X^{L,n}.
/// Requires 0 <= n <= L with L-n even.
BigInt x_term_count(int L, int n);

/// All distinct terms of X^{L,n}: every n-subset of positions carrying unit
/// vectors, times every perfect pairing of the rest (lowest unpaired
/// position paired first, so the order is canonical and duplicate-free).
std::vector<XTerm> enumerate_x_terms(int L, int n);

namespace detail {

void validate_unit(const std::array<double, 3>& u);
void validate_unit(const std::array<Rational, 3>& u);

// Evaluates one X term at a concrete Cartesian index list.
template <class Scalar>
Scalar x_term_value(const XTerm& term, std::span<const int> idx,
                    const std::array<Scalar, 3>& u) {
  for (auto [p, q] : term.delta_pairs)
    if (idx[static_cast<std::size_t>(p)] != idx[static_cast<std::size_t>(q)]) return Scalar{};
  Scalar v = detail::scalar_from_rational<Scalar>(Rational(1));
  for (int p : term.unit_positions) v *= u[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
  return v;
}

}  // namespace detail

/// Evaluates X^{L,n} at the unit vector u componentwise. Exact for Rational
/// scalars; doubles are validated to |u| = 1 within 1e-12.
template <class Scalar>
SymTensor<Scalar> evaluate_x(int L, int n, const std::array<Scalar, 3>& u) {
  const auto terms = enumerate_x_terms(L, n);  // also validates (L, n)
  detail::validate_unit(u);
  SymTensor<Scalar> out(L);
  for (const MultiIndex& m : multi_indices(L)) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(L));
    for (int ax = 0; ax < 3; ++ax)
      for (int k = 0; k < m.e[static_cast<std::size_t>(ax)]; ++k) idx.push_back(ax);
    Scalar sum{};
    for (const XTerm& t : terms) sum += detail::x_term_value(t, idx, u);
    out.at(m) = sum;
  }
  return out;
}

/// Linear combination sum_n coeffs[n] * X^{L,n}. Keys share the parity of
/// the rank, zero coefficients are absent, iteration is by descending n.
class XCombo {
public:
  using CoeffMap = std::map<int, Rational, std::greater<int>>;

  explicit XCombo(int rank);

  /// The bare monomial: X^{rank,rank} with coefficient 1.
  static XCombo monomial(int rank);

  int rank() const { return rank_; }
  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& coeffs() const { return coeffs_; }

  /// Coefficient of X^{rank,n}; zero when absent.
  Rational coeff(int n) const;

  /// Adds c * X^{rank,n}; validates parity and range, drops zeros.
  void add_term(int n, const Rational& c);

  XCombo& operator+=(const XCombo& o);
  XCombo& operator-=(const XCombo& o);
  XCombo& operator*=(const Rational& s);
  friend XCombo operator+(XCombo a, const XCombo& b) { return a += b; }
  friend XCombo operator-(XCombo a, const XCombo& b) { return a -= b; }
  friend XCombo operator*(XCombo a, const Rational& s) { return a *= s; }
  friend XCombo operator*(const Rational& s, XCombo a) { return a *= s; }

  bool operator==(const XCombo&) const = default;

private:
  int rank_;
  CoeffMap coeffs_;
};

/// Contraction with the unit vector on one index:
/// X^{L,n} p = (n+1) X^{L-1,n+1} + X^{L-1,n-1}, applied per key (keys
/// falling outside [0, L-1] drop out). Rank must be >= 1.
XCombo combo_contract_vector(const XCombo& c);

/// Trace over one index pair: X^{L,n} delta = (L+n+1) X^{L-2,n} + X^{L-2,n-2},
/// applied per key. Rank must be >= 2.
XCombo combo_trace(const XCombo& c);

/// Symmetrized product: each key pair (l, n) contributes
/// a[l] * b[n] * kappa(La, l, Lb, n) to key l+n of rank La+Lb.
XCombo combo_multiply_sym(const XCombo& a, const XCombo& b);

/// Evaluates the combination at u. Exact when Scalar is Rational.
template <class Scalar>
SymTensor<Scalar> evaluate_combo(const XCombo& c, const std::array<Scalar, 3>& u) {
  SymTensor<Scalar> out(c.rank());
  for (const auto& [n, coeff] : c.coeffs()) {
    SymTensor<Scalar> x = evaluate_x(c.rank(), n, u);
    x *= detail::scalar_from_rational<Scalar>(coeff);
    out += x;
  }
  return out;
}

// Brute-force tensor operations. These work on expanded components and are
// the independent route against which the coefficient identities above are
// checked.

/// Contracts the last index with u: out_m = sum_k u_k T_{m + e_k}.
template <class Scalar>
SymTensor<Scalar> tensor_contract_vector(const SymTensor<Scalar>& t,
                                         const std::array<Scalar, 3>& u) {
  if (t.rank() < 1) throw domain_error("tensor_contract_vector: rank must be >= 1");
  SymTensor<Scalar> out(t.rank() - 1);
  for (const MultiIndex& m : multi_indices(t.rank() - 1)) {
    Scalar sum{};
    for (int ax = 0; ax < 3; ++ax) {
      MultiIndex up = m;
      ++up.e[static_cast<std::size_t>(ax)];
      sum += u[static_cast<std::size_t>(ax)] * t.at(up);
    }
    out.at(m) = sum;
  }
  return out;
}

/// Traces the last index pair: out_m = sum_k T_{m + 2 e_k}.
template <class Scalar>
SymTensor<Scalar> tensor_trace_last_pair(const SymTensor<Scalar>& t) {
  if (t.rank() < 2) throw domain_error("tensor_trace_last_pair: rank must be >= 2");
  SymTensor<Scalar> out(t.rank() - 2);
  for (const MultiIndex& m : multi_indices(t.rank() - 2)) {
    Scalar sum{};
    for (int ax = 0; ax < 3; ++ax) {
      MultiIndex up = m;
      up.e[static_cast<std::size_t>(ax)] += 2;
      sum += t.at(up);
    }
    out.at(m) = sum;
  }
  return out;
}

/// Symmetrized outer product by explicit index-shuffle enumeration: the sum
/// over all binom(La+Lb, La) ways to route the combined index set.
template <class Scalar>
SymTensor<Scalar> symmetrized_outer_product(const SymTensor<Scalar>& a,
                                            const SymTensor<Scalar>& b);

/// Full contraction of two same-rank tensors, weighting each triple by its
/// Cartesian multiplicity L!/(a!b!c!).
template <class Scalar>
Scalar sym_tensor_dot(const SymTensor<Scalar>& a, const SymTensor<Scalar>& b) {
  if (a.rank() != b.rank()) throw domain_error("sym_tensor_dot: rank mismatch");
  Scalar sum{};
  for (const MultiIndex& m : multi_indices(a.rank()))
    sum += detail::scalar_from_bigint<Scalar>(multi_index_multiplicity(m)) * a.at(m) * b.at(m);
  return sum;
}

// -- implementation of symmetrized_outer_product --------------------------

namespace detail {
// Visits every size-k subset of {0,...,total-1}.
template <class Fn>
void for_each_subset(int total, int k, Fn&& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(std::span<const int>(pick));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}
}  // namespace detail

template <class Scalar>
SymTensor<Scalar> symmetrized_outer_product(const SymTensor<Scalar>& a,
                                            const SymTensor<Scalar>& b) {
  const int la = a.rank(), lb = b.rank(), total = la + lb;
  SymTensor<Scalar> out(total);
  for (const MultiIndex& m : multi_indices(total)) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(total));
    for (int ax = 0; ax < 3; ++ax)
      for (int k = 0; k < m.e[static_cast<std::size_t>(ax)]; ++k) idx.push_back(ax);
    Scalar sum{};
    detail::for_each_subset(total, la, [&](std::span<const int> pick) {
      MultiIndex ma, mb = m;
      for (int pos : pick) {
        int ax = idx[static_cast<std::size_t>(pos)];
        ++ma.e[static_cast<std::size_t>(ax)];
        --mb.e[static_cast<std::size_t>(ax)];
      }
      sum += a.at(ma) * b.at(mb);
    });
    out.at(m) = sum;
  }
  return out;
}

}  // namespace angtensor
