#ifndef FRACODE_REFERENCE_TABLES_HPP
#define FRACODE_REFERENCE_TABLES_HPP

#include <array>
#include <string>
#include <vector>

namespace fracode::reference {

// Published benchmark tables 1-6: analytic values and per-method absolute
// errors at five sample abscissae, for alpha in {0.1, 0.5, 0.9}. A NaN cell
// means the source reports no value there.

/// How a reproduced cell is judged against the printed value.
enum class CellCheck {
    AnalyticAbs,   // |computed - printed| <= 5e-7
    ErrorAbsTiny,  // computed error itself <= 1e-6 (linear-form kernel rows)
    ErrorRel10,    // within 10% of the printed error
    ErrorRel25,    // within 25% of the printed error
    ErrorRel25OrDoc, // 25%, or order-of-magnitude with a documented ambiguity
    ErrorRelDoc,   // 25%, else reported as a documented deviation
    None,          // reported for information only
};

struct Row {
    std::string label;
    CellCheck check;
    std::array<double, 5> values; // NaN = not reported
};

struct Block {
    double alpha;
    std::array<double, 5> analytic;
    std::vector<Row> error_rows;
};

struct Table {
    int id;
    std::array<double, 5> sample_x;
    std::vector<Block> blocks;
};

/// Printed data for table id in 1..6; throws std::out_of_range otherwise.
const Table& table(int id);

// Cell tolerances (pinned; shared by the CLI verdicts and the acceptance suite).
inline constexpr double analytic_abs_tol = 5e-7;
inline constexpr double tiny_error_abs_tol = 1e-6;

} // namespace fracode::reference

#endif
