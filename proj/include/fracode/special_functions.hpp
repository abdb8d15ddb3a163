#ifndef FRACODE_SPECIAL_FUNCTIONS_HPP
#define FRACODE_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>
#include <string>

namespace fracode {

/// Parameters of the two-parameter Mittag-Leffler series E_{alpha,beta}.
struct MLParams {
    double alpha;
    double beta;
    double tol = 1e-14;
    int max_terms = 500;

    void validate() const;
};

/// Thrown when a series fails to meet its tolerance within max_terms.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double last_term)
        : std::runtime_error(what), last_term_(last_term) {}
    double last_term() const noexcept { return last_term_; }

private:
    double last_term_;
};

/// Gamma function. Throws std::domain_error at the poles (0, -1, -2, ...).
double gamma_fn(double x);

/// E_{alpha,beta}(z) = sum_i z^i / Gamma(alpha*i + beta), compensated summation.
double mittag_leffler(const MLParams& p, double z);

/// Derivative series of the composite x -> E_{alpha,beta}(-lambda x^alpha):
/// sum_{i>=1} (-lambda)^i * i * x^(alpha*i - 1) / Gamma(alpha*i + beta).
double ml_deriv_x(const MLParams& p, double lambda, double x);

} // namespace fracode

#endif
