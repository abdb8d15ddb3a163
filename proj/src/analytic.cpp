#include "fracode/analytic.hpp"
#include "fracode/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace fracode {
namespace {

void require_class(const ProblemSpec& spec, EquationClass c, const char* who) {
    if (spec.cls != c)
        throw std::invalid_argument(std::string(who) + ": wrong equation class");
}

} // namespace

AnalyticValue analytic_eq5(const ProblemSpec& spec, double x) {
    require_class(spec, EquationClass::P2_CAPUTO, "analytic_eq5");
    const double a = 2.0 - spec.alpha;
    const double t = x - spec.x0;
    if (t == 0.0) return {spec.ic.y0, spec.ic.yp0};
    const MLParams e2{a, 2.0};
    const double z = -spec.lambda * std::pow(t, a);
    const double E2 = mittag_leffler(e2, z);
    const double y = spec.ic.y0 + spec.ic.yp0 * t * E2;
    const double d1 = spec.ic.yp0 * E2 + spec.ic.yp0 * a * t * ml_deriv_x(e2, spec.lambda, t);
    return {y, d1};
}

AnalyticValue analytic_eq6(const ProblemSpec& spec, double x) {
    require_class(spec, EquationClass::P2_RL, "analytic_eq6");
    const double a = 2.0 - spec.alpha;
    const double t = x - spec.x0;
    if (t == 0.0) return {spec.ic.y0, spec.ic.yp0};
    const MLParams e1{a, 1.0};
    const MLParams e2{a, 2.0};
    const double z = -spec.lambda * std::pow(t, a);
    const double E1 = mittag_leffler(e1, z);
    const double E2 = mittag_leffler(e2, z);
    const double y = spec.ic.y0 * E1 + spec.ic.yp0 * t * E2;
    const double d1 = a * spec.ic.y0 * ml_deriv_x(e1, spec.lambda, t) +
                      spec.ic.yp0 * E2 +
                      a * spec.ic.yp0 * t * ml_deriv_x(e2, spec.lambda, t);
    return {y, d1};
}

double analytic_eq7(const ProblemSpec& spec, double /*x*/) {
    require_class(spec, EquationClass::P1_CAPUTO, "analytic_eq7");
    return spec.ic.y0;
}

double analytic_eq8(const ProblemSpec& spec, double x) {
    require_class(spec, EquationClass::P1_RL, "analytic_eq8");
    const double a = 1.0 - spec.alpha;
    const double t = x - spec.x0;
    if (t == 0.0) return spec.ic.y0;
    return spec.ic.y0 * mittag_leffler({a, 1.0}, -spec.lambda * std::pow(t, a));
}

double analytic_eq9(const ProblemSpec& spec, double x) {
    require_class(spec, EquationClass::P0_CAPUTO, "analytic_eq9");
    const double t = x - spec.x0;
    if (t == 0.0) return spec.ic.y0;
    return spec.ic.y0 * mittag_leffler({spec.alpha, 1.0}, -spec.lambda * std::pow(t, spec.alpha));
}

double analytic_eq10(const ProblemSpec& spec, double /*x*/) {
    require_class(spec, EquationClass::P0_RL, "analytic_eq10");
    return 0.0;
}

double caputo_of_x_squared(double alpha, double x) {
    return gamma_fn(3.0) * std::pow(x, 2.0 - alpha) / gamma_fn(3.0 - alpha);
}

AnalyticValue analytic_solution(const ProblemSpec& spec, double x) {
    switch (spec.cls) {
        case EquationClass::P2_CAPUTO: return analytic_eq5(spec, x);
        case EquationClass::P2_RL: return analytic_eq6(spec, x);
        case EquationClass::P1_CAPUTO: return {analytic_eq7(spec, x), 0.0};
        case EquationClass::P1_RL: return {analytic_eq8(spec, x), 0.0};
        case EquationClass::P0_CAPUTO: return {analytic_eq9(spec, x), 0.0};
        case EquationClass::P0_RL: return {analytic_eq10(spec, x), 0.0};
    }
    throw std::logic_error("analytic_solution: unknown class");
}

std::string to_string(EquationClass c) {
    switch (c) {
        case EquationClass::P2_CAPUTO: return "p2-caputo";
        case EquationClass::P2_RL: return "p2-rl";
        case EquationClass::P1_CAPUTO: return "p1-caputo";
        case EquationClass::P1_RL: return "p1-rl";
        case EquationClass::P0_CAPUTO: return "p0-caputo";
        case EquationClass::P0_RL: return "p0-rl";
    }
    return "?";
}

EquationClass equation_class_from_string(const std::string& s) {
    if (s == "p2-caputo") return EquationClass::P2_CAPUTO;
    if (s == "p2-rl") return EquationClass::P2_RL;
    if (s == "p1-caputo") return EquationClass::P1_CAPUTO;
    if (s == "p1-rl") return EquationClass::P1_RL;
    if (s == "p0-caputo") return EquationClass::P0_CAPUTO;
    if (s == "p0-rl") return EquationClass::P0_RL;
    throw std::invalid_argument("unknown equation class: " + s);
}

} // namespace fracode
