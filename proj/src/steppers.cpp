#include "fracode/steppers.hpp"

#include <cmath>

namespace fracode {
namespace {

constexpr std::array<double, 6> factorial = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0};

} // namespace

NordsieckState gear_predict(const NordsieckState& state_prev, double h) {
    // Predictor weights P_l = h^l / l!, zero for l < 0.
    std::array<double, 6> p;
    double hl = 1.0;
    for (int l = 0; l < 6; ++l) {
        p[l] = hl / factorial[l];
        hl *= h;
    }
    NordsieckState out;
    for (int i = 0; i < 6; ++i) {
        double s = 0.0;
        for (int j = i; j < 6; ++j)
            s += p[j - i] * state_prev.d[j];
        out.d[i] = s;
    }
    return out;
}

NordsieckState gear_correct(const NordsieckState& predicted, double d2_corrected, double h) {
    const double delta = d2_corrected - predicted.d[2];
    NordsieckState out = predicted;
    for (int i = 0; i < 6; ++i)
        out.d[i] += factorial[i] / (2.0 * std::pow(h, i - 2)) *
                    GearCoefficients::corrector[i] * delta;
    return out;
}

} // namespace fracode
