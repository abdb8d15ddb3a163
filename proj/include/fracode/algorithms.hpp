#ifndef FRACODE_ALGORITHMS_HPP
#define FRACODE_ALGORITHMS_HPP

#include "fracode/problem.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fracode {

/// Which discrete Caputo form a predictor-corrector scheme evaluates.
enum class CaputoForm { Case1, Case2, Case3, Case4 };

std::string to_string(CaputoForm f);
CaputoForm caputo_form_from_string(const std::string& s);

struct SolutionTrace {
    double x0 = 0.0;
    double h = 0.0;
    std::vector<double> y;    // y_0..y_N
    std::vector<double> d1y;  // D^1 y_0..D^1 y_N
    std::vector<double> frac; // fractional-derivative value used at each step
    std::vector<std::string> deviation_flags;
};

class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t step, double value)
        : std::runtime_error("solution diverged at step " + std::to_string(step) +
                             " (|y| = " + std::to_string(value) + ")"),
          step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// c = Gamma(1-alpha)^(-1/alpha); regularizes the initial-condition term of
/// the Riemann-Liouville derivative near x0. Undefined at alpha = 0.
double shift_constant(double alpha);

/// Initial-condition term converting a Caputo value into the RL value:
/// y0 * offset^(-alpha) / Gamma(1-alpha), offset = x* - x0 > 0.
double rl_to_caputo_correction(double y0, double alpha, double x_star_minus_x0);

// The nine end-to-end solvers. Naming: equation class family (1 = p2 Caputo,
// 2 = p2 RL, 3 = p1 Caputo, 4 = p1 RL, 5 = p0 Caputo) x driver (1 = Euler,
// 2 = Adams, 3 = Gear). The Adams and Gear variants accept the Caputo form
// they evaluate at the current node (defaults: the linear and middle forms).

SolutionTrace alg_1_1(const ProblemSpec& spec, const Grid& grid);
SolutionTrace alg_1_2(const ProblemSpec& spec, const Grid& grid, CaputoForm form = CaputoForm::Case4);
SolutionTrace alg_1_3(const ProblemSpec& spec, const Grid& grid, CaputoForm form = CaputoForm::Case3);
SolutionTrace alg_2_1(const ProblemSpec& spec, const Grid& grid);
SolutionTrace alg_2_2(const ProblemSpec& spec, const Grid& grid, CaputoForm form = CaputoForm::Case4);
SolutionTrace alg_2_3(const ProblemSpec& spec, const Grid& grid, CaputoForm form = CaputoForm::Case3);
SolutionTrace alg_3_1(const ProblemSpec& spec, const Grid& grid);
SolutionTrace alg_4_1(const ProblemSpec& spec, const Grid& grid);
SolutionTrace alg_5_1(const ProblemSpec& spec, const Grid& grid);

} // namespace fracode

#endif
