#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tolfit {

// Everything a 2-D tolerable-set plot needs, already computed: the polygon
// (counterclockwise, possibly degenerate or empty), the estimate, and the
// half-width of the variability box drawn around it.
struct Plot2dInput {
    std::vector<std::array<double, 2>> polygon;
    std::optional<std::array<double, 2>> x_hat;
    double ive = 0.0;  // absolute variability; box is x_hat +- ive per axis
    std::string title;
};

// Renders a deterministic standalone SVG document: same input, same bytes.
// An empty polygon produces an annotation instead of geometry; a polygon
// with fewer than 3 vertices is drawn as segment or point and flagged as
// zero-area in the title.
std::string render_plot2d(const Plot2dInput& in);

}  // namespace tolfit
