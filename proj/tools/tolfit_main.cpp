// Command-line frontend: loads an interval dataset, fits the linear model by
// compatibility maximization, quantifies the estimate's variability, and
// optionally reports the solution-set geometry as a box, polygon plot, or
// benchmark table.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tolfit/conditioning.hpp"
#include "tolfit/dataset.hpp"
#include "tolfit/maximize.hpp"
#include "tolfit/report.hpp"
#include "tolfit/solution_set.hpp"
#include "tolfit/svg.hpp"
#include "tolfit/tol.hpp"
#include "tolfit/variability.hpp"

namespace {

// 0 = success, 1 = unreadable or unusable data, 2 = well-formed request the
// geometry cannot satisfy (empty or unbounded set, dimension limits).
constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitInfeasible = 2;

// |max_tol| below this is reported as numerically zero: the set is on the
// verge of vanishing and the estimate should not be trusted.
constexpr double kUnstableEps = 1e-9;

constexpr std::size_t kHullDimLimit = 12;

struct Options {
    std::string input;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 42;
    std::size_t exact_threshold = 3;
    int anneal_restarts = 8;
    int anneal_steps = 5000;
    long tol_max_iters = 20000;
    std::vector<double> start;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    cmd->add_option("--seed", opt.seed, "seed for the conditioning search")
        ->capture_default_str();
    cmd->add_option("--exact-threshold", opt.exact_threshold,
                    "use the exhaustive fit for n up to this many parameters")
        ->capture_default_str();
    cmd->add_option("--anneal-restarts", opt.anneal_restarts,
                    "independent annealing chains in the conditioning search")
        ->capture_default_str();
    cmd->add_option("--anneal-steps", opt.anneal_steps,
                    "annealing steps per chain")
        ->capture_default_str();
    cmd->add_option("--tol-max-iters", opt.tol_max_iters,
                    "evaluation budget for the ascent fit")
        ->capture_default_str();
    cmd->add_option("--start", opt.start,
                    "comma-separated start point for the ascent fit")
        ->delimiter(',');
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int write_output(const std::string& text, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opt.out, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << opt.out << "'\n";
        return kExitData;
    }
    return kExitOk;
}

struct PipelineResult {
    tolfit::FitResult fit;
    tolfit::CondResult cond;
    tolfit::Report report;
};

// fit -> boundedness -> conditioning -> variability; hull is layered on by
// the callers that need it.
PipelineResult run_pipeline(const tolfit::IntervalSystem& sys,
                            const Options& opt) {
    PipelineResult res;
    tolfit::Report& rep = res.report;
    rep.m = sys.rows();
    rep.n = sys.cols();

    const auto t_fit = std::chrono::steady_clock::now();
    if (sys.cols() <= opt.exact_threshold) {
        res.fit = tolfit::maximize_tol_exact(sys);
    } else {
        tolfit::SolverConfig cfg;
        cfg.start = opt.start;
        cfg.max_iters = opt.tol_max_iters;
        res.fit = tolfit::maximize_tol(sys, cfg);
    }
    rep.timing.fit_ms = ms_since(t_fit);

    rep.max_tol = res.fit.max_tol;
    rep.x_hat = res.fit.x_hat;
    rep.converged = res.fit.converged;
    rep.method =
        res.fit.method == tolfit::FitMethod::exact_oracle ? "exact" : "ascent";
    rep.iterations = res.fit.iterations;
    rep.unstable = std::abs(res.fit.max_tol) <= kUnstableEps;
    rep.boundedness = tolfit::to_string(
        tolfit::check_boundedness(sys, res.fit.max_tol).status);

    const auto t_cond = std::chrono::steady_clock::now();
    tolfit::AnnealConfig anneal;
    anneal.seed = opt.seed;
    anneal.restarts = opt.anneal_restarts;
    anneal.steps = opt.anneal_steps;
    res.cond = tolfit::min_cond(sys.A, anneal);
    rep.timing.cond_ms = ms_since(t_cond);

    const tolfit::VariabilityReport var =
        tolfit::variability(sys, res.fit, res.cond);
    rep.min_cond = res.cond.min_cond;
    rep.cond_seed = res.cond.seed;
    rep.b_hat_norm = var.b_hat_norm;
    rep.ive = var.ive;
    rep.abs_ive = var.abs_ive;
    rep.rve = var.rve;
    rep.sqrt_factor_dim = var.sqrt_factor_dim;
    rep.x_hat_zero = var.x_hat_zero;

    rep.timing.total_ms = rep.timing.fit_ms + rep.timing.cond_ms;
    return res;
}

tolfit::HullReport hull_report(const tolfit::IntervalVector& box) {
    tolfit::HullReport hull;
    hull.box = box;
    double sum_sq = 0.0;
    for (const tolfit::Interval& e : box) {
        const double r = tolfit::rad(e);
        hull.rad_inf = std::max(hull.rad_inf, r);
        sum_sq += r * r;
    }
    hull.rad_2 = std::sqrt(sum_sq);
    return hull;
}

int emit_report(const tolfit::Report& rep, const Options& opt) {
    const std::string text = opt.format == "csv" ? tolfit::report_to_csv(rep)
                                                 : tolfit::report_to_json(rep);
    return write_output(text, opt);
}

std::optional<tolfit::IntervalSystem> load_or_complain(const Options& opt) {
    try {
        return tolfit::load_dataset(opt.input);
    } catch (const tolfit::ParseError& e) {
        std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

// The variability scale is undefined for an identically zero right-hand
// side; reject such data uniformly before fitting.
bool usable_rhs(const tolfit::IntervalSystem& sys) {
    for (const tolfit::Interval& e : sys.b)
        if (e.lo != 0.0 || e.hi != 0.0) return true;
    std::cerr << "error: right-hand side is identically zero\n";
    return false;
}

int cmd_fit(const Options& opt) {
    const auto sys = load_or_complain(opt);
    if (!sys) return kExitData;
    if (!usable_rhs(*sys)) return kExitData;
    const PipelineResult res = run_pipeline(*sys, opt);
    if (res.report.boundedness == "unbounded")
        std::cerr << "warning: tolerable solution set is unbounded\n";
    return emit_report(res.report, opt);
}

int cmd_hull(const Options& opt) {
    const auto sys = load_or_complain(opt);
    if (!sys) return kExitData;
    if (!usable_rhs(*sys)) return kExitData;
    if (sys->cols() > kHullDimLimit) {
        std::cerr << "error: hull enumeration supports at most "
                  << kHullDimLimit << " parameters, dataset has "
                  << sys->cols() << "\n";
        return kExitInfeasible;
    }

    PipelineResult res = run_pipeline(*sys, opt);
    if (res.fit.max_tol < 0.0) {
        std::cerr << "error: tolerable solution set is empty (max tol = "
                  << res.fit.max_tol << ")\n";
        return kExitInfeasible;
    }
    if (res.report.boundedness == "unbounded") {
        std::cerr << "error: tolerable solution set is unbounded\n";
        return kExitInfeasible;
    }

    const auto t_hull = std::chrono::steady_clock::now();
    res.report.hull = hull_report(tolfit::tss_hull(*sys));
    res.report.timing.hull_ms = ms_since(t_hull);
    res.report.timing.total_ms += res.report.timing.hull_ms;
    return emit_report(res.report, opt);
}

int cmd_plot2d(const Options& opt) {
    const auto sys = load_or_complain(opt);
    if (!sys) return kExitData;
    if (sys->cols() != 2) {
        std::cerr << "error: plot2d needs a two-parameter dataset, got n = "
                  << sys->cols() << "\n";
        return kExitInfeasible;
    }
    if (!usable_rhs(*sys)) return kExitData;

    tolfit::Plot2dInput plot;
    const PipelineResult res = run_pipeline(*sys, opt);
    if (res.fit.max_tol < 0.0) {
        // Nothing to draw; the annotation-only document still goes out so
        // plots can be generated unconditionally in scripts.
        return write_output(tolfit::render_plot2d(plot), opt);
    }
    if (res.report.boundedness == "unbounded") {
        std::cerr << "error: tolerable solution set is unbounded\n";
        return kExitInfeasible;
    }

    plot.polygon = tolfit::tss_polygon_2d(*sys);
    plot.x_hat = {{res.fit.x_hat[0], res.fit.x_hat[1]}};
    plot.ive = res.report.abs_ive;
    return write_output(tolfit::render_plot2d(plot), opt);
}

int cmd_table1(const Options& opt) {
    struct Row {
        std::size_t n;
        double K;
        double theta;
    };
    std::vector<Row> rows;
    for (const double K : {10.0, 20.0})
        for (const double theta : {2.0, 4.0, 6.0, 8.0, 10.0})
            rows.push_back({5, K, theta});
    for (const double K : {10.0, 20.0})
        for (const double theta : {6.0, 9.0, 12.0, 15.0, 20.0})
            rows.push_back({10, K, theta});

    std::string out = "n,K,theta,ive,rad_hull_inf,rad_hull_2\n";
    char buf[160];
    for (const Row& row : rows) {
        const tolfit::IntervalSystem sys =
            tolfit::diagonal_benchmark_system(row.n, row.K, row.theta);
        const PipelineResult res = run_pipeline(sys, opt);
        const tolfit::HullReport hull = hull_report(tolfit::tss_hull(sys));
        std::snprintf(buf, sizeof buf, "%zu,%g,%g,%.6g,%.6g,%.6g\n", row.n,
                      row.K, row.theta, res.report.ive, hull.rad_inf,
                      hull.rad_2);
        out += buf;
    }
    return write_output(out, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear model fitting under interval uncertainty"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* fit = app.add_subcommand(
        "fit", "fit a dataset and report estimate and variability");
    fit->add_option("input", opt.input, "dataset file (.csv or .json)")
        ->required();
    fit->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    add_common_flags(fit, opt);

    CLI::App* hull = app.add_subcommand(
        "hull", "fit plus the enclosing box of the tolerable set");
    hull->add_option("input", opt.input, "dataset file (.csv or .json)")
        ->required();
    hull->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    add_common_flags(hull, opt);

    CLI::App* plot = app.add_subcommand(
        "plot2d", "render a two-parameter tolerable set as SVG");
    plot->add_option("input", opt.input, "dataset file (.csv or .json)")
        ->required();
    add_common_flags(plot, opt);

    CLI::App* table = app.add_subcommand(
        "table1", "variability vs hull radius over the synthetic family");
    add_common_flags(table, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit->parsed()) return cmd_fit(opt);
        if (hull->parsed()) return cmd_hull(opt);
        if (plot->parsed()) return cmd_plot2d(opt);
        if (table->parsed()) return cmd_table1(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
