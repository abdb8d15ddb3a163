#ifndef FRACODE_STEPPERS_HPP
#define FRACODE_STEPPERS_HPP

#include <array>
#include <stdexcept>

namespace fracode {

/// Scaled-derivative state for the Gear scheme: d[i] = D^i y at a node.
struct NordsieckState {
    std::array<double, 6> d{};
};

struct GearCoefficients {
    // Corrector constants c_0..c_5 (exact rationals).
    static constexpr std::array<double, 6> corrector = {
        3.0 / 16.0, 251.0 / 360.0, 1.0, 11.0 / 18.0, 1.0 / 6.0, 1.0 / 60.0};
};

/// One explicit Euler step: y + h*f.
inline double euler_step(double y_prev, double f_prev, double h) {
    return y_prev + h * f_prev;
}

/// Fourth-order Adams-Bashforth predictor. f_hist = {f_{k-1}, f_{k-2}, f_{k-3}, f_{k-4}}.
inline double adams_predict(double y_prev, const std::array<double, 4>& f_hist, double h) {
    return y_prev + h * (55.0 * f_hist[0] - 59.0 * f_hist[1] +
                         37.0 * f_hist[2] - 9.0 * f_hist[3]) / 24.0;
}

/// Adams-Moulton corrector. f_hist = {f_{k-1}, f_{k-2}, f_{k-3}}, f_k at the predicted point.
inline double adams_correct(double y_prev, const std::array<double, 3>& f_hist, double f_k, double h) {
    return y_prev + h * (19.0 * f_hist[0] - 5.0 * f_hist[1] + f_hist[2]) / 24.0 +
           9.0 / 24.0 * h * f_k;
}

/// Taylor shift of each derivative by one step of size h.
NordsieckState gear_predict(const NordsieckState& state_prev, double h);

/// Applies the delta between the corrected and predicted second derivative
/// across the whole state; d2_corrected is f at the predicted point.
NordsieckState gear_correct(const NordsieckState& predicted, double d2_corrected, double h);

} // namespace fracode

#endif
