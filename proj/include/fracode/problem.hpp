#ifndef FRACODE_PROBLEM_HPP
#define FRACODE_PROBLEM_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracode {

/// Equation classes: D^p y + lambda * D^alpha y = 0 with the fractional
/// derivative taken in the Caputo or Riemann-Liouville sense.
enum class EquationClass {
    P2_CAPUTO, // y'' + lambda * C-D^alpha y = 0
    P2_RL,     // y'' + lambda * RL-D^alpha y = 0
    P1_CAPUTO, // y'  + lambda * C-D^alpha y = 0
    P1_RL,     // y'  + lambda * RL-D^alpha y = 0
    P0_CAPUTO, // C-D^alpha y + lambda y = 0
    P0_RL,     // RL-D^alpha y + lambda y = 0 (trivial zero solution)
};

std::string to_string(EquationClass c);
EquationClass equation_class_from_string(const std::string& s);

struct InitialConditions {
    double y0 = 0.0;
    double yp0 = 0.0; // first derivative at x0; used by the p=2 classes
};

struct ProblemSpec {
    EquationClass cls;
    double alpha;  // fractional order, in [0, 1)
    double lambda;
    double x0 = 0.0;
    InitialConditions ic;

    void validate() const {
        if (!(alpha >= 0.0 && alpha < 1.0))
            throw std::domain_error("ProblemSpec: alpha must lie in [0, 1)");
        if (!std::isfinite(lambda) || !std::isfinite(x0) ||
            !std::isfinite(ic.y0) || !std::isfinite(ic.yp0))
            throw std::domain_error("ProblemSpec: parameters must be finite");
    }
};

/// Uniform grid x_k = x0 + k*h, k = 0..n_steps.
struct Grid {
    double x0;
    double h;
    std::size_t n_steps;

    Grid(double x0_, double h_, std::size_t n_steps_) : x0(x0_), h(h_), n_steps(n_steps_) {
        if (!(h > 0.0)) throw std::domain_error("Grid: h must be positive");
        if (n_steps < 1) throw std::domain_error("Grid: n_steps must be >= 1");
    }

    double x(std::size_t k) const { return x0 + static_cast<double>(k) * h; }
    std::size_t size() const { return n_steps + 1; }
};

} // namespace fracode

#endif
