#ifndef FRACODE_TESTS_ORACLE_HPP
#define FRACODE_TESTS_ORACLE_HPP

// Independent numerical oracles used by the kernel and acceptance tests.
// Nothing here shares code with the library's discrete operators.

#include "fracode/special_functions.hpp"

#include <cmath>
#include <functional>

namespace fracode::testing {

// Adaptive Simpson with the classic 1/15 error estimate.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Caputo derivative of order alpha at x (left endpoint 0) by quadrature of
// the defining integral. The substitution t = (x - tau)^(1-alpha) absorbs
// the endpoint singularity, leaving a smooth integrand in t:
//   C-D^alpha y(x) = (1 / (Gamma(1-alpha) (1-alpha)))
//                    * int_0^{x^{1-alpha}} y'(x - t^{1/(1-alpha)}) dt.
inline double caputo_quadrature(const std::function<double(double)>& dy, double alpha,
                                double x, double tol = 1e-11) {
    const double e = 1.0 - alpha;
    auto g = [&](double t) { return dy(x - std::pow(t, 1.0 / e)); };
    return integrate(g, 0.0, std::pow(x, e), tol) / (gamma_fn(1.0 - alpha) * e);
}

} // namespace fracode::testing

#endif
