#include "fracode/kernels.hpp"
#include "fracode/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace fracode::kernels {
namespace {

void check_k(std::size_t k, std::span<const double> hist, std::size_t needed) {
    if (k < 1) throw std::domain_error("caputo kernel: k must be >= 1");
    if (hist.size() < needed)
        throw std::domain_error("caputo kernel: history shorter than required");
}

// (x_k - x_{j-1})^e - (x_k - x_j)^e, with the differences formed from
// index counts so long grids do not accumulate cancellation drift.
inline double bracket(std::size_t k, std::size_t j, double h, double e) {
    return std::pow(static_cast<double>(k - j + 1) * h, e) -
           std::pow(static_cast<double>(k - j) * h, e);
}

} // namespace

namespace serial {

double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k);
    const double e = 1.0 - alpha;
    double sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j)
        sum += hist[j - 1] * bracket(k, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e = 1.0 - alpha;
    double sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j)
        sum += hist[j] * bracket(k, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e = 1.0 - alpha;
    double sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j)
        sum += 0.5 * (hist[j] + hist[j - 1]) * bracket(k, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e1 = 1.0 - alpha;
    const double e2 = 2.0 - alpha;
    double sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        const double slope = (hist[j] - hist[j - 1]) / h;
        const double dj = static_cast<double>(k - j) * h;       // x_k - x_j
        const double djm1 = static_cast<double>(k - j + 1) * h; // x_k - x_{j-1}
        sum += slope / e2 * (std::pow(dj, e2) - std::pow(djm1, e2)) +
               (slope * dj + hist[j]) / e1 * (std::pow(djm1, e1) - std::pow(dj, e1));
    }
    return sum / gamma_fn(1.0 - alpha);
}

double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h) {
    check_k(k, samples, k + 1);
    double sum = samples[1] * std::pow(static_cast<double>(k) * h, beta);
    for (std::size_t j = 2; j <= k; ++j)
        sum += (samples[j] - samples[j - 1]) *
               std::pow(static_cast<double>(k - j + 1) * h, beta);
    return sum / gamma_fn(beta + 1.0);
}

} // namespace serial

double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h) {
    return k >= parallel_threshold ? openmp::caputo_case1(hist, k, alpha, h)
                                   : serial::caputo_case1(hist, k, alpha, h);
}
double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h) {
    return k >= parallel_threshold ? openmp::caputo_case2(hist, k, alpha, h)
                                   : serial::caputo_case2(hist, k, alpha, h);
}
double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h) {
    return k >= parallel_threshold ? openmp::caputo_case3(hist, k, alpha, h)
                                   : serial::caputo_case3(hist, k, alpha, h);
}
double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h) {
    return k >= parallel_threshold ? openmp::caputo_case4(hist, k, alpha, h)
                                   : serial::caputo_case4(hist, k, alpha, h);
}
double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h) {
    return k >= parallel_threshold ? openmp::rl_integral(samples, k, beta, h)
                                   : serial::rl_integral(samples, k, beta, h);
}

} // namespace fracode::kernels
