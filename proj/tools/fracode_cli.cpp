// fracode: command-line front end for the fractional-ODE toolkit.
//
// Subcommands:
//   solve   integrate one problem and emit x,y_numeric,y_analytic,abs_error CSV
//   table   recompute a published benchmark table (1..6) and judge every cell
//   figure  emit the curve data behind a published figure (2..6)
//   ml      evaluate the two-parameter Mittag-Leffler function
//
// Exit codes: 0 success, 2 usage/configuration error, 3 solution divergence,
// 4 table tolerance failure under --strict.

#include "fracode/analytic.hpp"
#include "fracode/harness.hpp"
#include "fracode/special_functions.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

// Writes to the --out path when given, stdout otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_solve(const fracode::RunConfig& config, const std::string& out_path) {
    const fracode::SolutionTrace trace = fracode::run(config);
    OutputTarget out(out_path);
    fracode::write_solve_csv(out.stream(), config, trace);
    return 0;
}

int run_table_cmd(int id, const std::string& format, const std::string& out_path, bool strict) {
    const fracode::TableResult result = fracode::run_table(id);
    OutputTarget out(out_path);
    if (format == "csv")
        fracode::write_table_csv(out.stream(), result);
    else if (format == "json")
        fracode::write_table_json(out.stream(), result);
    else
        fracode::print_table(out.stream(), result);
    if (strict && !result.all_pass()) return 4;
    return 0;
}

int run_figure_cmd(int id, const std::string& out_path) {
    const auto curves = fracode::run_figure(id);
    if (out_path.empty()) {
        // combined long format on stdout
        std::cout << "curve,x,y\n";
        for (const auto& c : curves)
            for (const auto& p : c.points)
                std::cout << c.label << ',' << fracode::format_csv_value(p[0]) << ','
                          << fracode::format_csv_value(p[1]) << '\n';
        return 0;
    }
    // one x,y file per curve: base.csv -> base.<label>.csv
    const auto dot = out_path.rfind('.');
    const std::string stem = dot == std::string::npos ? out_path : out_path.substr(0, dot);
    const std::string ext = dot == std::string::npos ? ".csv" : out_path.substr(dot);
    for (const auto& c : curves) {
        std::ofstream file(stem + "." + c.label + ext);
        if (!file) throw std::runtime_error("cannot open output file for curve " + c.label);
        file << "x,y\n";
        for (const auto& p : c.points)
            file << fracode::format_csv_value(p[0]) << ','
                 << fracode::format_csv_value(p[1]) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional-ODE solver toolkit"};
    app.require_subcommand(1);

    fracode::RunConfig config;
    std::string cls_name = "p2-caputo";
    std::string method_name = "euler";
    std::string form_name;
    std::string out_path;
    std::string format = "text";
    bool strict = false;
    int table_id = 0;
    int figure_id = 0;
    double ml_alpha = 1.0, ml_beta = 1.0, ml_z = 0.0;

    auto* solve = app.add_subcommand("solve", "integrate one initial-value problem");
    solve->set_help_flag("--help", "print this help message"); // frees -h for the step size
    solve->add_option("--class", cls_name,
                      "equation class: p2-caputo, p2-rl, p1-caputo, p1-rl, p0-caputo");
    solve->add_option("--alpha", config.alpha, "fractional order, in (0, 1)");
    solve->add_option("--lambda", config.lambda, "equation coefficient");
    solve->add_option("--x0", config.x0, "left endpoint");
    solve->add_option("--x-end", config.x_end, "right endpoint");
    solve->add_option("--h", config.h, "step size");
    solve->add_option("--y0", config.y0, "initial value");
    solve->add_option("--yp0", config.yp0, "initial first derivative (p = 2 classes)");
    solve->add_option("--method", method_name, "driver: euler, adams, gear");
    solve->add_option("--caputo-form", form_name,
                      "discrete form: case1..case4 (defaults per method)");
    solve->add_flag("--force", config.force, "allow method/form pairs outside the published set");
    solve->add_option("--sample", config.sample_points,
                      "emit CSV rows only at these x values");
    solve->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* table = app.add_subcommand("table", "recompute a published benchmark table");
    table->add_option("id", table_id, "table number")->required()->check(CLI::Range(1, 6));
    table->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_flag("--strict", strict, "exit 4 when any cell misses its tolerance");
    table->add_option("--out", out_path, "write here instead of stdout");

    auto* figure = app.add_subcommand("figure", "emit the data behind a published figure");
    figure->add_option("id", figure_id, "figure number")->required()->check(CLI::Range(2, 6));
    figure->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* ml = app.add_subcommand("ml", "evaluate E_{alpha,beta}(z)");
    ml->add_option("--alpha", ml_alpha, "first parameter, > 0")->required();
    ml->add_option("--beta", ml_beta, "second parameter, > 0");
    ml->add_option("--z", ml_z, "argument")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) {
            config.cls = fracode::equation_class_from_string(cls_name);
            config.method = fracode::method_from_string(method_name);
            if (!form_name.empty()) config.form = fracode::caputo_form_from_string(form_name);
            return run_solve(config, out_path);
        }
        if (*table) return run_table_cmd(table_id, format, out_path, strict);
        if (*figure) return run_figure_cmd(figure_id, out_path);
        if (*ml) {
            const double v = fracode::mittag_leffler({ml_alpha, ml_beta}, ml_z);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            std::cout << buf << '\n';
            return 0;
        }
    } catch (const fracode::DivergenceError& e) {
        std::cerr << "fracode: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fracode: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "fracode: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fracode: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
