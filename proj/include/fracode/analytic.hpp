#ifndef FRACODE_ANALYTIC_HPP
#define FRACODE_ANALYTIC_HPP

#include "fracode/problem.hpp"

namespace fracode {

struct AnalyticValue {
    double y;
    double d1y;
};

// Closed-form reference solutions for the six equation classes, built on
// the Mittag-Leffler series. Each function checks that the spec carries
// the matching equation class.

/// y'' + lambda C-D^alpha y = 0 with y(x0)=y0, y'(x0)=yp0.
AnalyticValue analytic_eq5(const ProblemSpec& spec, double x);

/// y'' + lambda RL-D^alpha y = 0 with classical initial conditions.
AnalyticValue analytic_eq6(const ProblemSpec& spec, double x);

/// y' + lambda C-D^alpha y = 0: the constant solution y0.
double analytic_eq7(const ProblemSpec& spec, double x);

/// y' + lambda RL-D^alpha y = 0: y0 * E_{1-alpha,1}(-lambda (x-x0)^{1-alpha}).
double analytic_eq8(const ProblemSpec& spec, double x);

/// C-D^alpha y + lambda y = 0: y0 * E_{alpha,1}(-lambda (x-x0)^alpha).
double analytic_eq9(const ProblemSpec& spec, double x);

/// RL-D^alpha y + lambda y = 0 has only the zero solution within the class
/// of continuous functions; the source paper drops this case after stating it.
double analytic_eq10(const ProblemSpec& spec, double x);

/// Caputo derivative of x^2: Gamma(3) x^(2-alpha) / Gamma(3-alpha).
double caputo_of_x_squared(double alpha, double x);

/// Dispatch on spec.cls; d1y is meaningful for the p=2 classes only.
AnalyticValue analytic_solution(const ProblemSpec& spec, double x);

} // namespace fracode

#endif
