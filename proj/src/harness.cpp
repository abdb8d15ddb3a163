#include "fracode/harness.hpp"
#include "fracode/analytic.hpp"
#include "fracode/kernels.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fracode {
namespace {

constexpr double NR = std::numeric_limits<double>::quiet_NaN();

bool is_p2(EquationClass c) {
    return c == EquationClass::P2_CAPUTO || c == EquationClass::P2_RL;
}

} // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Euler: return "euler";
        case Method::Adams: return "adams";
        case Method::Gear: return "gear";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "euler") return Method::Euler;
    if (s == "adams") return Method::Adams;
    if (s == "gear") return Method::Gear;
    throw std::invalid_argument("unknown method: " + s);
}

CaputoForm RunConfig::effective_form() const {
    if (form) return *form;
    switch (method) {
        case Method::Euler: return CaputoForm::Case1;
        case Method::Adams: return CaputoForm::Case4;
        case Method::Gear: return CaputoForm::Case3;
    }
    return CaputoForm::Case1;
}

std::size_t RunConfig::n_steps() const {
    const double r = (x_end - x0) / h;
    return static_cast<std::size_t>(std::llround(r));
}

void RunConfig::validate() const {
    problem().validate();
    if (!(x_end > x0)) throw std::invalid_argument("config: x_end must exceed x0");
    if (!(h > 0.0)) throw std::invalid_argument("config: h must be positive");
    const double r = (x_end - x0) / h;
    const double n = std::round(r);
    if (!(n >= 1.0) ||
        std::abs(r - n) > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, r))
        throw std::invalid_argument("config: (x_end - x0) / h must be an integer step count");
    if (cls == EquationClass::P0_RL)
        throw std::invalid_argument(
            "config: the p0 Riemann-Liouville class has only the trivial zero solution; "
            "no numerical scheme is defined for it");
    const CaputoForm f = effective_form();
    if (method == Method::Euler) {
        if (f != CaputoForm::Case1 && !force)
            throw std::invalid_argument(
                "config: the Euler scheme is defined with the left-side form (case1); "
                "pass --force to override");
    } else {
        if (!is_p2(cls))
            throw std::invalid_argument(
                "config: predictor-corrector schemes are defined only for the p=2 classes");
        if (f == CaputoForm::Case1 && !force)
            throw std::invalid_argument(
                "config: predictor-corrector schemes are defined with case2..case4; "
                "pass --force to override");
    }
}

SolutionTrace run(const RunConfig& config) {
    config.validate();
    const ProblemSpec spec = config.problem();
    const Grid g = config.grid();
    const CaputoForm f = config.effective_form();
    switch (config.method) {
        case Method::Euler:
            switch (config.cls) {
                case EquationClass::P2_CAPUTO: return alg_1_1(spec, g);
                case EquationClass::P2_RL: return alg_2_1(spec, g);
                case EquationClass::P1_CAPUTO: return alg_3_1(spec, g);
                case EquationClass::P1_RL: return alg_4_1(spec, g);
                case EquationClass::P0_CAPUTO: return alg_5_1(spec, g);
                default: break;
            }
            break;
        case Method::Adams:
            return config.cls == EquationClass::P2_CAPUTO ? alg_1_2(spec, g, f)
                                                          : alg_2_2(spec, g, f);
        case Method::Gear:
            return config.cls == EquationClass::P2_CAPUTO ? alg_1_3(spec, g, f)
                                                          : alg_2_3(spec, g, f);
    }
    throw std::logic_error("run: unhandled configuration");
}

std::string format_csv_value(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "";
    char buf[48];
    if (std::abs(v) < 1e-3)
        std::snprintf(buf, sizeof buf, "%.8e", v);
    else
        std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_solve_csv(std::ostream& os, const RunConfig& config, const SolutionTrace& trace) {
    os << "x,y_numeric,y_analytic,abs_error\n";
    const ProblemSpec spec = config.problem();
    auto emit = [&](std::size_t k) {
        const double x = trace.x0 + static_cast<double>(k) * trace.h;
        const double num = trace.y[k];
        const double ana = analytic_solution(spec, x).y;
        os << format_csv_value(x) << ',' << format_csv_value(num) << ','
           << format_csv_value(ana) << ',' << format_csv_value(std::abs(num - ana)) << '\n';
    };
    if (config.sample_points.empty()) {
        for (std::size_t k = 0; k < trace.y.size(); ++k) emit(k);
    } else {
        for (double x : config.sample_points) {
            const auto k = static_cast<std::size_t>(std::llround((x - trace.x0) / trace.h));
            if (k >= trace.y.size())
                throw std::invalid_argument("sample point outside the solved range");
            emit(k);
        }
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Documented: return "documented";
        case Verdict::NotReported: return "not-reported";
        case Verdict::Unchecked: return "unchecked";
    }
    return "?";
}

namespace {

Verdict judge(reference::CellCheck check, double printed, double computed) {
    using reference::CellCheck;
    if (std::isnan(printed)) return Verdict::NotReported;
    switch (check) {
        case CellCheck::AnalyticAbs:
            return std::abs(computed - printed) <= reference::analytic_abs_tol
                       ? Verdict::Pass : Verdict::Fail;
        case CellCheck::ErrorAbsTiny:
            return computed <= reference::tiny_error_abs_tol ? Verdict::Pass : Verdict::Fail;
        case CellCheck::ErrorRel10:
            return std::abs(computed - printed) <= 0.10 * printed ? Verdict::Pass : Verdict::Fail;
        case CellCheck::ErrorRel25:
            return std::abs(computed - printed) <= 0.25 * printed ? Verdict::Pass : Verdict::Fail;
        case CellCheck::ErrorRel25OrDoc:
            if (std::abs(computed - printed) <= 0.25 * printed) return Verdict::Pass;
            if (computed > 0.0 && computed <= 10.0 * printed && computed >= 0.1 * printed)
                return Verdict::Documented;
            return Verdict::Fail;
        case CellCheck::ErrorRelDoc:
            return std::abs(computed - printed) <= 0.25 * printed ? Verdict::Pass
                                                                  : Verdict::Documented;
        case CellCheck::None: return Verdict::Unchecked;
    }
    return Verdict::Unchecked;
}

TableRow judge_row(const std::string& label, reference::CellCheck check,
                   const std::array<double, 5>& printed, const std::array<double, 5>& computed) {
    TableRow row{label, computed, printed, {}};
    for (std::size_t i = 0; i < 5; ++i) row.verdicts[i] = judge(check, printed[i], computed[i]);
    return row;
}

struct SampleIdx {
    std::array<std::size_t, 5> k;
};

SampleIdx sample_indices(const std::array<double, 5>& xs, double h) {
    SampleIdx s{};
    for (std::size_t i = 0; i < 5; ++i)
        s.k[i] = static_cast<std::size_t>(std::llround(xs[i] / h));
    return s;
}

std::array<double, 5> trace_errors(const SolutionTrace& tr, const ProblemSpec& spec,
                                   const std::array<double, 5>& xs) {
    std::array<double, 5> e{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (std::isnan(xs[i])) { e[i] = NR; continue; }
        const auto k = static_cast<std::size_t>(std::llround((xs[i] - tr.x0) / tr.h));
        e[i] = std::abs(tr.y[k] - analytic_solution(spec, xs[i]).y);
    }
    return e;
}

TableResult run_table1() {
    const auto& ref = reference::table(1);
    const double h = 0.01;
    TableResult out{1, ref.sample_x, {}};
    const auto idx = sample_indices(ref.sample_x, h);
    for (const auto& block : ref.blocks) {
        const double alpha = block.alpha;
        std::array<double, 5> ana{};
        for (std::size_t i = 0; i < 5; ++i) ana[i] = caputo_of_x_squared(alpha, ref.sample_x[i]);
        TableBlock tb{alpha,
                      judge_row("analytical", reference::CellCheck::AnalyticAbs, block.analytic, ana),
                      {}};
        // history of D^1(x^2) = 2x on [0, 10]
        const std::size_t n = idx.k.back();
        std::vector<double> hist(n + 1);
        for (std::size_t j = 0; j <= n; ++j) hist[j] = 2.0 * static_cast<double>(j) * h;
        const std::array<CaputoForm, 4> forms = {CaputoForm::Case1, CaputoForm::Case2,
                                                 CaputoForm::Case3, CaputoForm::Case4};
        for (std::size_t r = 0; r < forms.size(); ++r) {
            std::array<double, 5> err{};
            for (std::size_t i = 0; i < 5; ++i) {
                const std::size_t k = idx.k[i];
                double v = 0.0;
                switch (forms[r]) {
                    case CaputoForm::Case1: v = kernels::caputo_case1(hist, k, alpha, h); break;
                    case CaputoForm::Case2: v = kernels::caputo_case2(hist, k, alpha, h); break;
                    case CaputoForm::Case3: v = kernels::caputo_case3(hist, k, alpha, h); break;
                    case CaputoForm::Case4: v = kernels::caputo_case4(hist, k, alpha, h); break;
                }
                err[i] = std::abs(v - ana[i]);
            }
            const auto& row = block.error_rows[r];
            tb.errors.push_back(judge_row(row.label, row.check, row.values, err));
        }
        out.blocks.push_back(std::move(tb));
    }
    return out;
}

TableResult run_solver_table(int id) {
    const auto& ref = reference::table(id);
    TableResult out{id, ref.sample_x, {}};
    const double h = 0.01;
    const double x_end = ref.sample_x.back();
    for (const auto& block : ref.blocks) {
        RunConfig base;
        base.alpha = block.alpha;
        base.lambda = 1.0;
        base.x0 = 0.0;
        base.x_end = x_end;
        base.h = h;
        switch (id) {
            case 2:
            case 3:
                base.cls = EquationClass::P2_CAPUTO;
                base.y0 = (id == 2) ? 0.0 : -1.0;
                base.yp0 = 1.0;
                break;
            case 4:
                base.cls = EquationClass::P2_RL;
                base.y0 = 1.0;
                base.yp0 = 1.0;
                break;
            case 5:
                base.cls = EquationClass::P1_RL;
                base.y0 = 1.0;
                break;
            case 6:
                base.cls = EquationClass::P0_CAPUTO;
                base.y0 = 1.0;
                break;
            default:
                throw std::out_of_range("run_table: id must be 1..6");
        }
        const ProblemSpec spec = base.problem();
        std::array<double, 5> ana{};
        for (std::size_t i = 0; i < 5; ++i)
            ana[i] = std::isnan(block.analytic[i])
                         ? NR
                         : analytic_solution(spec, ref.sample_x[i]).y;
        TableBlock tb{block.alpha,
                      judge_row("analytical", reference::CellCheck::AnalyticAbs, block.analytic, ana),
                      {}};
        for (const auto& row : block.error_rows) {
            RunConfig cfg = base;
            if (row.label.find("gear") != std::string::npos) cfg.method = Method::Gear;
            else if (row.label.find("adams") != std::string::npos) cfg.method = Method::Adams;
            else cfg.method = Method::Euler;
            if (row.label.find("case-II") != std::string::npos &&
                row.label.find("case-III") == std::string::npos)
                cfg.form = CaputoForm::Case2;
            else if (row.label.find("case-III") != std::string::npos)
                cfg.form = CaputoForm::Case3;
            else if (row.label.find("case-IV") != std::string::npos)
                cfg.form = CaputoForm::Case4;
            const SolutionTrace tr = run(cfg);
            std::array<double, 5> xs = ref.sample_x;
            for (std::size_t i = 0; i < 5; ++i)
                if (std::isnan(row.values[i]) && std::isnan(block.analytic[i])) xs[i] = NR;
            tb.errors.push_back(judge_row(row.label, row.check, row.values,
                                          trace_errors(tr, spec, xs)));
        }
        out.blocks.push_back(std::move(tb));
    }
    return out;
}

} // namespace

bool TableResult::all_pass() const {
    for (const auto& b : blocks) {
        for (auto v : b.analytic.verdicts)
            if (v == Verdict::Fail) return false;
        for (const auto& r : b.errors)
            for (auto v : r.verdicts)
                if (v == Verdict::Fail) return false;
    }
    return true;
}

TableResult run_table(int id) {
    if (id == 1) return run_table1();
    return run_solver_table(id);
}

void print_table(std::ostream& os, const TableResult& t) {
    os << "table " << t.id << "  (h=0.01, lambda=1)\n";
    os << std::left << std::setw(16) << "";
    for (double x : t.sample_x) os << std::setw(14) << ("y(" + format_csv_value(x) + ")");
    os << '\n';
    auto cell = [&](double v, Verdict verdict, bool analytic_row) {
        if (verdict == Verdict::NotReported) return std::string("-");
        char buf[32];
        if (analytic_row) std::snprintf(buf, sizeof buf, "%.7f", v);
        else std::snprintf(buf, sizeof buf, "%.2e", v);
        std::string s = buf;
        if (verdict == Verdict::Fail) s += " !";
        else if (verdict == Verdict::Documented) s += " d";
        return s;
    };
    for (const auto& b : t.blocks) {
        os << "alpha=" << b.alpha << '\n';
        os << std::left << std::setw(16) << ("  " + b.analytic.label);
        for (std::size_t i = 0; i < 5; ++i)
            os << std::setw(14) << cell(b.analytic.computed[i], b.analytic.verdicts[i], true);
        os << '\n';
        for (const auto& r : b.errors) {
            os << std::left << std::setw(16) << ("  " + r.label);
            for (std::size_t i = 0; i < 5; ++i)
                os << std::setw(14) << cell(r.computed[i], r.verdicts[i], false);
            os << '\n';
        }
    }
    os << (t.all_pass() ? "all cells within tolerance\n" : "TOLERANCE FAILURES PRESENT (!)\n");
}

void write_table_csv(std::ostream& os, const TableResult& t) {
    os << "alpha,row,x,printed,computed,verdict\n";
    for (const auto& b : t.blocks) {
        auto emit = [&](const TableRow& r) {
            for (std::size_t i = 0; i < 5; ++i)
                os << format_csv_value(b.alpha) << ',' << r.label << ','
                   << format_csv_value(t.sample_x[i]) << ',' << format_csv_value(r.printed[i])
                   << ',' << format_csv_value(r.computed[i]) << ',' << to_string(r.verdicts[i])
                   << '\n';
        };
        emit(b.analytic);
        for (const auto& r : b.errors) emit(r);
    }
}

void write_table_json(std::ostream& os, const TableResult& t) {
    nlohmann::json j;
    j["table"] = t.id;
    j["sample_x"] = t.sample_x;
    j["all_pass"] = t.all_pass();
    j["config"] = {{"h", 0.01}, {"lambda", 1.0}};
    auto row_json = [&](const TableRow& r) {
        nlohmann::json rj;
        rj["label"] = r.label;
        for (std::size_t i = 0; i < 5; ++i) {
            nlohmann::json c;
            c["x"] = t.sample_x[i];
            if (!std::isnan(r.printed[i])) c["printed"] = r.printed[i];
            if (!std::isnan(r.computed[i])) c["computed"] = r.computed[i];
            c["verdict"] = to_string(r.verdicts[i]);
            rj["cells"].push_back(c);
        }
        return rj;
    };
    for (const auto& b : t.blocks) {
        nlohmann::json bj;
        bj["alpha"] = b.alpha;
        bj["rows"].push_back(row_json(b.analytic));
        for (const auto& r : b.errors) bj["rows"].push_back(row_json(r));
        j["blocks"].push_back(bj);
    }
    os << j.dump(2) << '\n';
}

std::vector<Curve> run_figure(int id) {
    const std::array<double, 3> alphas = {0.1, 0.5, 0.9};
    std::vector<Curve> out;
    auto label = [](double a, const char* suffix = "") {
        std::ostringstream os;
        os << "alpha" << a << suffix;
        return os.str();
    };
    auto analytic_curve = [&](EquationClass cls, double y0, double yp0, double a,
                              double x_end, double step) {
        ProblemSpec spec{cls, a, 1.0, 0.0, {y0, yp0}};
        Curve c{label(a), {}};
        const auto n = static_cast<std::size_t>(std::llround(x_end / step));
        for (std::size_t k = 0; k <= n; ++k) {
            const double x = static_cast<double>(k) * step;
            c.points.push_back({x, analytic_solution(spec, x).y});
        }
        return c;
    };
    switch (id) {
        case 2:
            for (double a : alphas)
                out.push_back(analytic_curve(EquationClass::P2_CAPUTO, -1.0, 1.0, a, 10.0, 0.02));
            break;
        case 3:
            for (double a : alphas)
                out.push_back(analytic_curve(EquationClass::P2_RL, 1.0, 1.0, a, 10.0, 0.02));
            break;
        case 4: {
            for (double a : alphas) {
                RunConfig cfg;
                cfg.cls = EquationClass::P1_CAPUTO;
                cfg.alpha = a;
                cfg.y0 = 2.0;
                cfg.x_end = 10.0;
                const SolutionTrace tr = run(cfg);
                Curve c{label(a, "_numeric"), {}};
                for (std::size_t k = 0; k < tr.y.size(); ++k)
                    c.points.push_back({tr.x0 + static_cast<double>(k) * tr.h, tr.y[k]});
                out.push_back(std::move(c));
            }
            Curve ana = analytic_curve(EquationClass::P1_CAPUTO, 2.0, 0.0, 0.5, 10.0, 0.01);
            ana.label = "analytic";
            out.push_back(std::move(ana));
            break;
        }
        case 5:
            for (double a : alphas)
                out.push_back(analytic_curve(EquationClass::P1_RL, 1.0, 0.0, a, 5.0, 0.02));
            break;
        case 6:
            for (double a : alphas)
                out.push_back(analytic_curve(EquationClass::P0_CAPUTO, 1.0, 0.0, a, 5.0, 0.02));
            break;
        default:
            throw std::out_of_range("run_figure: id must be 2..6");
    }
    return out;
}

} // namespace fracode
