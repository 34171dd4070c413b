#pragma once

// Geometry of the tolerable solution set: membership, the boundedness
// criterion over point columns, the coordinate-aligned hull and the exact
// polygon in two dimensions.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tolfit/tol.hpp"

namespace tolfit {

// x is tolerable when every row image lands inside its rhs component;
// inclusive comparisons, no tolerance band
bool tss_member(const IntervalSystem& sys, std::span<const double> x);

enum class TssStatus { bounded, unbounded, empty_tss, all_columns_interval };

// Stable lowercase names ("bounded", "unbounded", "empty",
// "all_columns_interval") used in reports and on the command line.
const char* to_string(TssStatus status);
TssStatus tss_status_from_string(const std::string& name);

struct BoundednessVerdict {
    TssStatus status = TssStatus::bounded;
    // the point (zero-radius) columns, reported when they are linearly
    // dependent and therefore witness an unbounded direction
    std::vector<std::size_t> witness_columns;
};

// all_columns_interval also means bounded; only unbounded (and the empty
// verdict) rule a nonempty set out
bool is_bounded(const BoundednessVerdict& v);

// The nonempty tolerable set is unbounded exactly when the point columns of A
// are linearly dependent (a single all-zero point column counts). Rank comes
// from singular values with threshold 1e-10 * sigma_max. Pass the known
// maximum of tol when available; a negative one short-circuits to empty_tss.
BoundednessVerdict check_boundedness(const IntervalSystem& sys,
                                     std::optional<double> max_tol = std::nullopt);

// Tightest coordinate-aligned box around the set: one lp pair per coordinate
// per sign orthant (n <= 12). Throws std::invalid_argument for larger n,
// std::runtime_error when the set is empty or unbounded.
IntervalVector tss_hull(const IntervalSystem& sys);

// Exact convex polygon of the set for n == 2, counterclockwise, vertices
// deduplicated at 1e-9. Flat sets give 2 vertices (a segment) or 1 (a point);
// an empty set gives no vertices.
std::vector<std::array<double, 2>> tss_polygon_2d(const IntervalSystem& sys);

} // namespace tolfit
