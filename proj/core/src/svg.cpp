#include "tolfit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tolfit {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Box {
    double xlo = std::numeric_limits<double>::infinity();
    double xhi = -std::numeric_limits<double>::infinity();
    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    bool valid() const { return xlo <= xhi; }
};

// Pixel mapping with a 10% data pad and the usual y flip.
struct Projection {
    double xlo, ylo, xscale, yscale;

    explicit Projection(Box b) {
        double padx = 0.1 * (b.xhi - b.xlo);
        double pady = 0.1 * (b.yhi - b.ylo);
        if (padx == 0.0) padx = 1.0;
        if (pady == 0.0) pady = 1.0;
        b.xlo -= padx;
        b.xhi += padx;
        b.ylo -= pady;
        b.yhi += pady;
        xlo = b.xlo;
        ylo = b.ylo;
        xscale = (kWidth - 2 * kMargin) / (b.xhi - b.xlo);
        yscale = (kHeight - 2 * kMargin) / (b.yhi - b.ylo);
    }
    double px(double x) const { return kMargin + (x - xlo) * xscale; }
    double py(double y) const { return kHeight - kMargin - (y - ylo) * yscale; }
    double data_x(double p) const { return xlo + (p - kMargin) / xscale; }
    double data_y(double p) const {
        return ylo + (kHeight - kMargin - p) / yscale;
    }
};

double polygon_area(const std::vector<std::array<double, 2>>& poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(twice);
}

}  // namespace

std::string render_plot2d(const Plot2dInput& in) {
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
           " " + num(kHeight) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const bool degenerate =
        !in.polygon.empty() &&
        (in.polygon.size() < 3 || polygon_area(in.polygon) == 0.0);
    std::string title = in.title.empty() ? "tolerable solution set" : in.title;
    if (degenerate) title += " (zero-area set)";

    if (in.polygon.empty()) {
        svg += "  <title>" + title + " (empty)</title>\n";
        svg += "  <text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">tolerable solution set is empty</text>\n";
        svg += "</svg>\n";
        return svg;
    }
    svg += "  <title>" + title + "</title>\n";

    Box data;
    for (const auto& v : in.polygon) data.add(v[0], v[1]);
    if (in.x_hat) {
        const double h = std::abs(in.ive);
        data.add((*in.x_hat)[0] - h, (*in.x_hat)[1] - h);
        data.add((*in.x_hat)[0] + h, (*in.x_hat)[1] + h);
    }
    const Projection proj(data);

    // Axes along the plot frame with end labels in data coordinates.
    const double x0 = kMargin, x1 = kWidth - kMargin;
    const double y0 = kHeight - kMargin, y1 = kMargin;
    svg += "  <g stroke=\"#444\" fill=\"none\">\n";
    svg += "    <line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
           num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
    svg += "    <line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
           num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
    svg += "  </g>\n";
    svg += "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n";
    svg += "    <text x=\"" + num(x0) + "\" y=\"" + num(y0 + 18) + "\">" +
           num(proj.data_x(x0)) + "</text>\n";
    svg += "    <text x=\"" + num(x1) + "\" y=\"" + num(y0 + 18) +
           "\" text-anchor=\"end\">" + num(proj.data_x(x1)) + "</text>\n";
    svg += "    <text x=\"" + num(x0 - 6) + "\" y=\"" + num(y0) +
           "\" text-anchor=\"end\">" + num(proj.data_y(y0)) + "</text>\n";
    svg += "    <text x=\"" + num(x0 - 6) + "\" y=\"" + num(y1 + 4) +
           "\" text-anchor=\"end\">" + num(proj.data_y(y1)) + "</text>\n";
    svg += "  </g>\n";

    // The set itself: polygon, segment or single point.
    if (in.polygon.size() >= 3) {
        svg += "  <polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" "
               "stroke=\"#3182bd\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < in.polygon.size(); ++i) {
            if (i) svg += ' ';
            svg += num(proj.px(in.polygon[i][0])) + "," +
                   num(proj.py(in.polygon[i][1]));
        }
        svg += "\"/>\n";
    } else if (in.polygon.size() == 2) {
        svg += "  <line stroke=\"#3182bd\" stroke-width=\"2\" x1=\"" +
               num(proj.px(in.polygon[0][0])) + "\" y1=\"" +
               num(proj.py(in.polygon[0][1])) + "\" x2=\"" +
               num(proj.px(in.polygon[1][0])) + "\" y2=\"" +
               num(proj.py(in.polygon[1][1])) + "\"/>\n";
    } else {
        svg += "  <circle fill=\"#3182bd\" r=\"3\" cx=\"" +
               num(proj.px(in.polygon[0][0])) + "\" cy=\"" +
               num(proj.py(in.polygon[0][1])) + "\"/>\n";
    }

    if (in.x_hat) {
        const double h = std::abs(in.ive);
        if (h > 0.0) {
            svg += "  <rect fill=\"none\" stroke=\"#e6550d\" "
                   "stroke-width=\"1.5\" stroke-dasharray=\"6 3\" x=\"" +
                   num(proj.px((*in.x_hat)[0] - h)) + "\" y=\"" +
                   num(proj.py((*in.x_hat)[1] + h)) + "\" width=\"" +
                   num(2 * h * proj.xscale) + "\" height=\"" +
                   num(2 * h * proj.yscale) + "\"/>\n";
        }
        svg += "  <circle fill=\"#e6550d\" r=\"4\" cx=\"" +
               num(proj.px((*in.x_hat)[0])) + "\" cy=\"" +
               num(proj.py((*in.x_hat)[1])) + "\"/>\n";
    }

    // Legend, top right.
    svg += "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "    <rect x=\"" + num(x1 - 180) + "\" y=\"" + num(y1) +
           "\" width=\"14\" height=\"14\" fill=\"#9ecae1\" "
           "stroke=\"#3182bd\"/>\n";
    svg += "    <text x=\"" + num(x1 - 160) + "\" y=\"" + num(y1 + 12) +
           "\">tolerable set</text>\n";
    if (in.x_hat) {
        svg += "    <circle cx=\"" + num(x1 - 173) + "\" cy=\"" +
               num(y1 + 28) + "\" r=\"4\" fill=\"#e6550d\"/>\n";
        svg += "    <text x=\"" + num(x1 - 160) + "\" y=\"" + num(y1 + 32) +
               "\">estimate</text>\n";
        svg += "    <rect x=\"" + num(x1 - 180) + "\" y=\"" + num(y1 + 42) +
               "\" width=\"14\" height=\"14\" fill=\"none\" "
               "stroke=\"#e6550d\" stroke-dasharray=\"6 3\"/>\n";
        svg += "    <text x=\"" + num(x1 - 160) + "\" y=\"" + num(y1 + 54) +
               "\">variability box</text>\n";
    }
    svg += "  </g>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace tolfit
