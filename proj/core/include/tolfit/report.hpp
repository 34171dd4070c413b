#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tolfit/interval.hpp"

namespace tolfit {

// Hull section of a report: the enclosing box and the two norms of its
// radius vector.
struct HullReport {
    IntervalVector box;
    double rad_inf = 0.0;
    double rad_2 = 0.0;
};

// Wall-clock milliseconds per pipeline stage.  Excluded from report equality
// so reruns compare clean.
struct ReportTiming {
    double fit_ms = 0.0;
    double cond_ms = 0.0;
    double hull_ms = 0.0;
    double total_ms = 0.0;
};

// Full machine-readable result of a fit run: problem shape, the estimate,
// conditioning and variability, optional hull geometry, and timing.
struct Report {
    std::size_t m = 0;
    std::size_t n = 0;
    double max_tol = 0.0;
    std::vector<double> x_hat;
    bool converged = false;
    std::string method;  // "ascent" or "exact"
    long iterations = 0;
    std::string boundedness;  // see to_string(TssStatus)
    bool unstable = false;    // |max_tol| at numerical zero
    bool x_hat_zero = false;
    double min_cond = 0.0;
    std::uint64_t cond_seed = 0;
    double b_hat_norm = 0.0;
    double ive = 0.0;
    double abs_ive = 0.0;
    double rve = 0.0;
    std::size_t sqrt_factor_dim = 0;
    std::optional<HullReport> hull;
    ReportTiming timing;
};

// True when everything except timing matches exactly.
bool same_results(const Report& a, const Report& b);

// JSON serialization.  Round-trips losslessly; non-finite values are encoded
// as the strings "inf"/"-inf"/"nan".
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

// Flat key,value listing of the same fields for spreadsheet use.
std::string report_to_csv(const Report& report);

}  // namespace tolfit
