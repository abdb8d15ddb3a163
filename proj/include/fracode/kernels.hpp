#ifndef FRACODE_KERNELS_HPP
#define FRACODE_KERNELS_HPP

#include <cstddef>
#include <span>

namespace fracode::kernels {

// Discrete Caputo-derivative forms over a uniform grid of step h. The
// history holds samples B_j of D^1 y at the nodes; the sum runs over the
// subintervals up to node k. All kernels are linear in the history and
// recompute the full O(k) sum each call.
//
// Each kernel exists in a plain serial form (the reference) and an
// OpenMP-reduced form; the unqualified entry points dispatch on k.

namespace serial {

/// Left-side form (case-I): weight B_{j-1} per subinterval.
double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h);

/// Right-side form (case-II): weight B_j per subinterval.
double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h);

/// Middle-side form (case-III): weight (B_j + B_{j-1})/2.
double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h);

/// Linear form (case-IV): piecewise-linear interpolation of the history.
double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h);

/// Discrete Riemann-Liouville integral of order beta over y samples.
double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h);

} // namespace serial

namespace openmp {

double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h);
double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h);

} // namespace openmp

// History length below which the parallel sum is not worth its overhead.
// Every table-reproduction run (N <= 1000) stays on the serial path, which
// also keeps CSV output byte-stable regardless of thread count.
inline constexpr std::size_t parallel_threshold = 8192;

double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h);
double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h);
double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h);

} // namespace fracode::kernels

#endif
