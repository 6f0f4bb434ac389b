#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace angtensor::kernels {

/// Quadrature nodes in structure-of-arrays layout.
struct NodeSet {
  std::vector<double> x, y, z, w;

  std::size_t size() const { return x.size(); }
  void push(double nx, double ny, double nz, double nw) {
    x.push_back(nx);
    y.push_back(ny);
    z.push_back(nz);
    w.push_back(nw);
  }
};

/// For every exponent triple (a,b,c) with a+b+c == rank, in lexicographic
/// (a,b) order, adds
///     sum_i w_i P_ell(u . n_i) x_i^a y_i^b z_i^c
/// into out[triple]. out must hold (rank+1)(rank+2)/2 entries.
void project_accumulate_scalar(const NodeSet& nodes, int rank, int ell,
                               const std::array<double, 3>& u, std::span<double> out);

#if defined(ANGTENSOR_HAVE_AVX2)
/// AVX2 variant of project_accumulate_scalar; same contract, 4 nodes per step.
void project_accumulate_avx2(const NodeSet& nodes, int rank, int ell,
                             const std::array<double, 3>& u, std::span<double> out);
#endif

/// Runtime-dispatched entry point (AVX2 when compiled in and the CPU has it,
/// scalar otherwise).
void project_accumulate(const NodeSet& nodes, int rank, int ell,
                        const std::array<double, 3>& u, std::span<double> out);

bool has_avx2();
const char* active_backend();  // "avx2" or "scalar"

namespace detail {
/// Shared recursion constants so the scalar and SIMD paths evaluate the
/// Legendre recursion with identical roundings: P_k = c1[k] t P_{k-1} - c2[k] P_{k-2}.
struct LegendreCoeffs {
  std::vector<double> c1, c2;
  explicit LegendreCoeffs(int ell) : c1(static_cast<size_t>(ell) + 1), c2(static_cast<size_t>(ell) + 1) {
    for (int k = 2; k <= ell; ++k) {
      c1[static_cast<size_t>(k)] = double(2 * k - 1) / double(k);
      c2[static_cast<size_t>(k)] = double(k - 1) / double(k);
    }
  }
};
}  // namespace detail

}  // namespace angtensor::kernels
