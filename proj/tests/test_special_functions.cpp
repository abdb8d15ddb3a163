#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracode/special_functions.hpp"

#include <cmath>

using namespace fracode;

TEST_CASE("gamma matches known values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-14));
    // Reflection spot check: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    const double z = 0.3;
    CHECK(gamma_fn(z) * gamma_fn(1.0 - z) ==
          doctest::Approx(std::acos(-1.0) / std::sin(std::acos(-1.0) * z)).epsilon(1e-13));
}

TEST_CASE("gamma throws at the poles") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-7.0), std::domain_error);
}

TEST_CASE("ml parameter validation") {
    CHECK_THROWS_AS(mittag_leffler({0.0, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler({-0.5, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler({1.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("E_{1,1} is the exponential") {
    for (double z = -5.0; z <= 5.0; z += 0.25)
        CHECK(mittag_leffler({1.0, 1.0}, z) == doctest::Approx(std::exp(z)).epsilon(1e-12));
}

TEST_CASE("E_{2,1}(-x^2) is the cosine") {
    for (double x = 0.0; x <= 5.0; x += 0.25)
        CHECK(mittag_leffler({2.0, 1.0}, -x * x) ==
              doctest::Approx(std::cos(x)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("E_{1,2}(z) = (exp(z) - 1)/z") {
    for (double z : {-3.0, -1.0, -0.1, 0.5, 2.0, 4.0})
        CHECK(mittag_leffler({1.0, 2.0}, z) ==
              doctest::Approx(std::expm1(z) / z).epsilon(1e-12));
}

TEST_CASE("E_{1/2,1}(-sqrt(x)) = exp(x) erfc(sqrt(x))") {
    for (double x = 0.05; x <= 5.0; x += 0.15) {
        const double s = std::sqrt(x);
        CHECK(mittag_leffler({0.5, 1.0}, -s) ==
              doctest::Approx(std::exp(x) * std::erfc(s)).epsilon(1e-10));
    }
}

TEST_CASE("series truncation is reported, not silently wrong") {
    MLParams tight{0.3, 1.0};
    tight.max_terms = 5;
    CHECK_THROWS_AS(mittag_leffler(tight, -30.0), TruncationError);
    try {
        mittag_leffler(tight, -30.0);
    } catch (const TruncationError& e) {
        CHECK(std::abs(e.last_term()) > tight.tol);
    }
}

TEST_CASE("ml_deriv_x matches a finite difference of the composite map") {
    // d/dx E_{a,b}(-lambda x^a) for several (a, lambda, x) triples.
    for (double alpha : {0.3, 0.8, 1.5}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const MLParams p{alpha, 2.0};
            auto g = [&](double x) {
                return mittag_leffler(p, -lambda * std::pow(x, alpha));
            };
            for (double x : {0.5, 1.0, 2.0}) {
                const double d = 1e-5;
                const double fd = (g(x + d) - g(x - d)) / (2.0 * d);
                // The series gives d/dx in terms of the inner variable:
                // ml_deriv_x already carries the chain-rule factor split used
                // by the analytic solutions (alpha * x^{alpha-1} inside).
                const double exact = alpha * ml_deriv_x(p, lambda, x);
                // Cancellation in the alternating series caps the agreement
                // well above the series tolerance.
                CHECK(exact == doctest::Approx(fd).epsilon(1e-3));
            }
        }
    }
}
