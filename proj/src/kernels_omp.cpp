#include "fracode/kernels.hpp"
#include "fracode/special_functions.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fracode::kernels::openmp {
namespace {

void check_k(std::size_t k, std::span<const double> hist, std::size_t needed) {
    if (k < 1) throw std::domain_error("caputo kernel: k must be >= 1");
    if (hist.size() < needed)
        throw std::domain_error("caputo kernel: history shorter than required");
}

inline double bracket(std::int64_t k, std::int64_t j, double h, double e) {
    return std::pow(static_cast<double>(k - j + 1) * h, e) -
           std::pow(static_cast<double>(k - j) * h, e);
}

} // namespace

double caputo_case1(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k);
    const double e = 1.0 - alpha;
    const auto n = static_cast<std::int64_t>(k);
    const double* b = hist.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t j = 1; j <= n; ++j)
        sum += b[j - 1] * bracket(n, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case2(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e = 1.0 - alpha;
    const auto n = static_cast<std::int64_t>(k);
    const double* b = hist.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t j = 1; j <= n; ++j)
        sum += b[j] * bracket(n, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case3(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e = 1.0 - alpha;
    const auto n = static_cast<std::int64_t>(k);
    const double* b = hist.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t j = 1; j <= n; ++j)
        sum += 0.5 * (b[j] + b[j - 1]) * bracket(n, j, h, e);
    return sum / gamma_fn(2.0 - alpha);
}

double caputo_case4(std::span<const double> hist, std::size_t k, double alpha, double h) {
    check_k(k, hist, k + 1);
    const double e1 = 1.0 - alpha;
    const double e2 = 2.0 - alpha;
    const auto n = static_cast<std::int64_t>(k);
    const double* b = hist.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t j = 1; j <= n; ++j) {
        const double slope = (b[j] - b[j - 1]) / h;
        const double dj = static_cast<double>(n - j) * h;
        const double djm1 = static_cast<double>(n - j + 1) * h;
        sum += slope / e2 * (std::pow(dj, e2) - std::pow(djm1, e2)) +
               (slope * dj + b[j]) / e1 * (std::pow(djm1, e1) - std::pow(dj, e1));
    }
    return sum / gamma_fn(1.0 - alpha);
}

double rl_integral(std::span<const double> samples, std::size_t k, double beta, double h) {
    check_k(k, samples, k + 1);
    const auto n = static_cast<std::int64_t>(k);
    const double* b = samples.data();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t j = 2; j <= n; ++j)
        sum += (b[j] - b[j - 1]) * std::pow(static_cast<double>(n - j + 1) * h, beta);
    sum += b[1] * std::pow(static_cast<double>(n) * h, beta);
    return sum / gamma_fn(beta + 1.0);
}

} // namespace fracode::kernels::openmp
