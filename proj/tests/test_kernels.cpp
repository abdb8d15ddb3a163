#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracode/kernels.hpp"
#include "fracode/special_functions.hpp"
#include "oracle.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fracode;

namespace {

using Kernel = double (*)(std::span<const double>, std::size_t, double, double);

const std::vector<std::pair<const char*, Kernel>> all_forms = {
    {"case1", kernels::serial::caputo_case1},
    {"case2", kernels::serial::caputo_case2},
    {"case3", kernels::serial::caputo_case3},
    {"case4", kernels::serial::caputo_case4},
};

std::vector<double> random_history(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n + 1);
    for (auto& x : v) x = u(rng);
    return v;
}

} // namespace

TEST_CASE("kernels reject short histories and k = 0") {
    std::vector<double> hist(5, 1.0);
    CHECK_THROWS_AS(kernels::serial::caputo_case1(hist, 0, 0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(kernels::serial::caputo_case2(hist, 5, 0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(kernels::serial::rl_integral(hist, 5, 0.5, 0.1), std::domain_error);
}

TEST_CASE("every form is linear in the history") {
    const std::size_t k = 64;
    const double h = 0.01;
    const auto a = random_history(k, 1);
    const auto b = random_history(k, 2);
    std::vector<double> combo(k + 1);
    for (std::size_t j = 0; j <= k; ++j) combo[j] = 2.5 * a[j] - 0.75 * b[j];
    for (double alpha : {0.1, 0.5, 0.9}) {
        for (const auto& [name, kern] : all_forms) {
            CAPTURE(name);
            CAPTURE(alpha);
            const double lhs = kern(combo, k, alpha, h);
            const double rhs = 2.5 * kern(a, k, alpha, h) - 0.75 * kern(b, k, alpha, h);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
}

TEST_CASE("constant history telescopes to the exact power law") {
    // With B_j = c the sums collapse and every form must equal the Caputo
    // derivative of c*x: c * x^(1-alpha) / Gamma(2-alpha).
    const double c = 1.7;
    const double h = 0.02;
    for (double alpha : {0.1, 0.5, 0.9}) {
        for (std::size_t k : {std::size_t(1), std::size_t(7), std::size_t(250)}) {
            std::vector<double> hist(k + 1, c);
            const double exact = c * std::pow(static_cast<double>(k) * h, 1.0 - alpha) /
                                 gamma_fn(2.0 - alpha);
            for (const auto& [name, kern] : all_forms) {
                CAPTURE(name);
                CHECK(kern(hist, k, alpha, h) == doctest::Approx(exact).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("the linear form is exact for a linear derivative history") {
    // B_j = 2 x_j is the exact first derivative of x^2; the piecewise-linear
    // form integrates it without discretization error.
    const double h = 0.01;
    for (double alpha : {0.1, 0.5, 0.9}) {
        for (std::size_t k : {std::size_t(10), std::size_t(400)}) {
            std::vector<double> hist(k + 1);
            for (std::size_t j = 0; j <= k; ++j) hist[j] = 2.0 * static_cast<double>(j) * h;
            const double x = static_cast<double>(k) * h;
            const double exact = 2.0 * std::pow(x, 2.0 - alpha) / gamma_fn(3.0 - alpha);
            CHECK(kernels::serial::caputo_case4(hist, k, alpha, h) ==
                  doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("left/right forms bracket the middle form for a monotone history") {
    const std::size_t k = 100;
    const double h = 0.01;
    std::vector<double> hist(k + 1);
    for (std::size_t j = 0; j <= k; ++j) hist[j] = static_cast<double>(j) * h; // increasing
    for (double alpha : {0.1, 0.5, 0.9}) {
        const double left = kernels::serial::caputo_case1(hist, k, alpha, h);
        const double mid = kernels::serial::caputo_case3(hist, k, alpha, h);
        const double right = kernels::serial::caputo_case2(hist, k, alpha, h);
        CHECK(left < mid);
        CHECK(mid < right);
        CHECK(mid == doctest::Approx(0.5 * (left + right)).epsilon(1e-13));
    }
}

TEST_CASE("discrete RL integral of a constant is x^beta / Gamma(beta+1)") {
    const double h = 0.05;
    for (double beta : {0.2, 0.5, 0.8}) {
        for (std::size_t k : {std::size_t(1), std::size_t(40)}) {
            std::vector<double> samples(k + 1, 3.0);
            const double exact =
                3.0 * std::pow(static_cast<double>(k) * h, beta) / gamma_fn(beta + 1.0);
            CHECK(kernels::serial::rl_integral(samples, k, beta, h) ==
                  doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("discrete RL integral converges on a smooth integrand") {
    // I^beta sin at x = 1 via the oracle integral
    // (1/Gamma(beta)) int_0^x (x - tau)^(beta-1) sin(tau) dtau, computed with
    // the same singularity-removing substitution the Caputo oracle uses.
    const double beta = 0.5;
    const double x = 1.0;
    auto f = [](double tau) { return std::sin(tau); };
    auto g = [&](double t) { return f(x - std::pow(t, 1.0 / beta)); };
    const double exact = testing::integrate(g, 0.0, std::pow(x, beta)) / (gamma_fn(beta) * beta);
    double prev_err = 1.0;
    for (std::size_t n : {std::size_t(100), std::size_t(400), std::size_t(1600)}) {
        const double h = x / static_cast<double>(n);
        std::vector<double> samples(n + 1);
        for (std::size_t j = 0; j <= n; ++j) samples[j] = f(static_cast<double>(j) * h);
        const double err = std::abs(kernels::serial::rl_integral(samples, n, beta, h) - exact);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 5e-4);
}

TEST_CASE("discrete forms agree with the quadrature oracle on smooth functions") {
    const double h = 1e-3;
    const std::size_t k = 1000; // x = 1
    struct Fn {
        const char* name;
        double (*dy)(double);
    };
    const Fn fns[] = {
        {"x^2", [](double x) { return 2.0 * x; }},
        {"x^3", [](double x) { return 3.0 * x * x; }},
        {"sin", [](double x) { return std::cos(x); }},
    };
    for (const auto& fn : fns) {
        std::vector<double> hist(k + 1);
        for (std::size_t j = 0; j <= k; ++j) hist[j] = fn.dy(static_cast<double>(j) * h);
        for (double alpha : {0.1, 0.5, 0.9}) {
            CAPTURE(fn.name);
            CAPTURE(alpha);
            const double oracle = testing::caputo_quadrature(fn.dy, alpha, 1.0);
            CHECK(std::abs(kernels::serial::caputo_case4(hist, k, alpha, h) - oracle) < 1e-5);
            CHECK(std::abs(kernels::serial::caputo_case3(hist, k, alpha, h) - oracle) < 1e-2);
        }
    }
}

TEST_CASE("openmp kernels reproduce the serial reference") {
    const std::size_t k = 20000; // above the dispatch threshold
    const double h = 1e-4;
    const auto hist = random_history(k, 7);
    for (double alpha : {0.1, 0.5, 0.9}) {
        CHECK(kernels::openmp::caputo_case1(hist, k, alpha, h) ==
              doctest::Approx(kernels::serial::caputo_case1(hist, k, alpha, h)).epsilon(1e-11));
        CHECK(kernels::openmp::caputo_case2(hist, k, alpha, h) ==
              doctest::Approx(kernels::serial::caputo_case2(hist, k, alpha, h)).epsilon(1e-11));
        CHECK(kernels::openmp::caputo_case3(hist, k, alpha, h) ==
              doctest::Approx(kernels::serial::caputo_case3(hist, k, alpha, h)).epsilon(1e-11));
        CHECK(kernels::openmp::caputo_case4(hist, k, alpha, h) ==
              doctest::Approx(kernels::serial::caputo_case4(hist, k, alpha, h)).epsilon(1e-11));
        CHECK(kernels::openmp::rl_integral(hist, k, alpha, h) ==
              doctest::Approx(kernels::serial::rl_integral(hist, k, alpha, h)).epsilon(1e-11));
    }
    // The dispatching front must take the parallel path here and still agree.
    CHECK(kernels::caputo_case1(hist, k, 0.5, h) ==
          doctest::Approx(kernels::serial::caputo_case1(hist, k, 0.5, h)).epsilon(1e-11));
}
