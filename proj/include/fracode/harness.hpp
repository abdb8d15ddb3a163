#ifndef FRACODE_HARNESS_HPP
#define FRACODE_HARNESS_HPP

#include "fracode/algorithms.hpp"
#include "fracode/problem.hpp"
#include "fracode/reference_tables.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracode {

enum class Method { Euler, Adams, Gear };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct RunConfig {
    EquationClass cls;
    double alpha = 0.5;
    double lambda = 1.0;
    double x0 = 0.0;
    double x_end = 1.0;
    double h = 0.01;
    double y0 = 0.0;
    double yp0 = 0.0;
    Method method = Method::Euler;
    std::optional<CaputoForm> form; // defaults per method when unset
    bool force = false;             // allow method/form pairs outside the published set
    std::vector<double> sample_points; // when non-empty, CSV rows only at these x

    void validate() const;
    std::size_t n_steps() const;
    Grid grid() const { return Grid(x0, h, n_steps()); }
    ProblemSpec problem() const { return {cls, alpha, lambda, x0, {y0, yp0}}; }
    CaputoForm effective_form() const;
};

/// Solves the configured problem with the selected driver.
SolutionTrace run(const RunConfig& config);

/// CSV cell format: up to 9 significant digits, scientific below 1e-3.
std::string format_csv_value(double v);

/// Writes `x,y_numeric,y_analytic,abs_error` rows for the whole trace
/// (or only at config.sample_points when given).
void write_solve_csv(std::ostream& os, const RunConfig& config, const SolutionTrace& trace);

enum class Verdict { Pass, Fail, Documented, NotReported, Unchecked };

std::string to_string(Verdict v);

struct TableRow {
    std::string label;
    std::array<double, 5> computed;
    std::array<double, 5> printed;
    std::array<Verdict, 5> verdicts;
};

struct TableBlock {
    double alpha;
    TableRow analytic;
    std::vector<TableRow> errors;
};

struct TableResult {
    int id;
    std::array<double, 5> sample_x;
    std::vector<TableBlock> blocks;

    bool all_pass() const; // no Fail verdict anywhere
};

/// Recomputes table id (1..6) with the published run configuration
/// (h = 0.01, lambda = 1) and judges every cell against the printed value.
TableResult run_table(int id);

void print_table(std::ostream& os, const TableResult& t);
void write_table_csv(std::ostream& os, const TableResult& t);
void write_table_json(std::ostream& os, const TableResult& t);

struct Curve {
    std::string label;
    std::vector<std::array<double, 2>> points; // {x, y}
};

/// Figure data, id in 2..6: analytic curves per alpha (figure 4 adds the
/// numeric overlay for the constant-solution problem).
std::vector<Curve> run_figure(int id);

} // namespace fracode

#endif
