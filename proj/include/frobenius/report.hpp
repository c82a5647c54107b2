#pragma once
#ifndef FROBENIUS_REPORT_HPP
#define FROBENIUS_REPORT_HPP

// Table rows and the SVG line-family plot rendered by the command line tool.

#include <frobenius/coin.hpp>
#include <frobenius/geometry.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace frobenius {

/// One row of the solution table: a representation of d, or an
/// "Impossible" row when d is a gap.
struct TableRow {
    Int d = 0;
    std::optional<Representation> representation;

    bool impossible() const noexcept { return !representation.has_value(); }
};

/// "a*x + b*y = d" with numerals, e.g. "3*1 + 7*0 = 3".
inline std::string equation_string(const CoinPair& pair, const Representation& r, Int d)
{
    return std::to_string(pair.a()) + "*" + std::to_string(r.x) + " + " + std::to_string(pair.b()) + "*" +
           std::to_string(r.y) + " = " + std::to_string(d);
}

/// Rows for 1 <= d <= d_max ordered by d, then by x.
inline std::vector<TableRow> solution_table(const CoinPair& pair, Int d_max)
{
    if (d_max < 1) {
        throw InvalidArgument("d_max must be at least 1, got " + std::to_string(d_max));
    }
    std::vector<TableRow> rows;
    for (Int d = 1; d <= d_max; ++d) {
        const auto solutions = nonneg_solutions(pair, d);
        if (solutions.empty()) {
            rows.push_back(TableRow{d, std::nullopt});
            continue;
        }
        for (const auto& r : solutions) {
            rows.push_back(TableRow{d, r});
        }
    }
    return rows;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------

struct PlotOptions {
    Int width_px = 800;
    Int height_px = 600;
};

namespace detail {

inline std::string svg_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? std::string("0.00") : s;
}

inline double to_double(const Rational& r)
{
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

}  // namespace detail

/// SVG 1.1 drawing of L_d for 1 <= d <= d_max over the box
/// [-1, d_max/a + 1] x [-1, d_max/b + 1], 10% margins, uniform scale.
/// Segments with a first-quadrant lattice point get class "line-hit", the
/// others "line-gap"; every such lattice point gets a circle. Output is a
/// pure function of the arguments.
inline std::string render_plot_svg(const CoinPair& pair, Int d_max, const PlotOptions& options = {})
{
    if (d_max < 1) {
        throw InvalidArgument("d_max must be at least 1, got " + std::to_string(d_max));
    }
    if (options.width_px < 100 || options.height_px < 100) {
        throw InvalidArgument("plot width and height must be at least 100 px");
    }

    const double width = static_cast<double>(options.width_px);
    const double height = static_cast<double>(options.height_px);
    const double x_min = -1.0;
    const double y_min = -1.0;
    const double x_max = static_cast<double>(d_max) / static_cast<double>(pair.a()) + 1.0;
    const double y_max = static_cast<double>(d_max) / static_cast<double>(pair.b()) + 1.0;
    const double inner_w = 0.8 * width;
    const double inner_h = 0.8 * height;
    const double scale = std::min(inner_w / (x_max - x_min), inner_h / (y_max - y_min));
    const double off_x = 0.1 * width + (inner_w - (x_max - x_min) * scale) / 2.0;
    const double off_y = 0.1 * height + (inner_h - (y_max - y_min) * scale) / 2.0;

    const auto sx = [&](double x) { return detail::svg_number(off_x + (x - x_min) * scale); };
    const auto sy = [&](double y) { return detail::svg_number(height - off_y - (y - y_min) * scale); };
    const auto line = [&](const char* cls, double x1, double y1, double x2, double y2, const std::string& extra) {
        return std::string("    <line class=\"") + cls + "\"" + extra + " x1=\"" + sx(x1) + "\" y1=\"" + sy(y1) +
               "\" x2=\"" + sx(x2) + "\" y2=\"" + sy(y2) + "\"/>\n";
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px
        << "\" height=\"" << options.height_px << "\" viewBox=\"0 0 " << options.width_px << ' '
        << options.height_px << "\">\n";
    svg << "  <title>" << pair.a() << "x + " << pair.b() << "y = d for d = 1.." << d_max << "</title>\n";
    svg << "  <style>\n"
        << "    .axis { stroke: #000000; stroke-width: 1.5; }\n"
        << "    .line-hit { stroke: #1f77b4; stroke-width: 1; }\n"
        << "    .line-gap { stroke: #d62728; stroke-width: 1; stroke-dasharray: 4 3; }\n"
        << "    .lattice-point { fill: #2ca02c; }\n"
        << "  </style>\n";

    svg << "  <g id=\"axes\">\n";
    svg << line("axis", x_min, 0.0, x_max, 0.0, "");
    svg << line("axis", 0.0, y_min, 0.0, y_max, "");
    svg << "  </g>\n";

    std::ostringstream points;
    svg << "  <g id=\"lines\">\n";
    for (Int d = 1; d <= d_max; ++d) {
        const LatticeLine l{pair, d};
        const auto ends = segment_endpoints(l);
        const auto hits = lattice_points_first_quadrant(l);
        const std::string tag = " data-d=\"" + std::to_string(d) + "\"";
        svg << line(hits.empty() ? "line-gap" : "line-hit", detail::to_double(ends.on_x_axis.x), 0.0, 0.0,
                    detail::to_double(ends.on_y_axis.y), tag);
        for (const auto& p : hits) {
            points << "    <circle class=\"lattice-point\"" << tag << " cx=\"" << sx(static_cast<double>(p.x))
                   << "\" cy=\"" << sy(static_cast<double>(p.y)) << "\" r=\"3\"/>\n";
        }
    }
    svg << "  </g>\n";
    svg << "  <g id=\"points\">\n" << points.str() << "  </g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace frobenius

#endif  // FROBENIUS_REPORT_HPP
