#include "lteval/svg.hpp"

#include <cmath>

#include "lteval/text.hpp"

namespace lteval {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 760.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 530.0;
constexpr int kTicks = 5;

std::string px(double v) {
    return format_compact(std::round(v * 100.0) / 100.0);
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c; break;
        }
    }
    return out;
}

} // namespace

std::string render_svg_plot(const SvgPlot& plot) {
    double x_min = plot.x_min;
    double x_max = plot.x_max;
    double y_min = plot.y_min;
    double y_max = plot.y_max;
    // Single-sample plots degenerate to a centered marker.
    if (!(x_max > x_min)) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (!(y_max > y_min)) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const auto to_px_x = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    };
    const auto to_px_y = [&](double y) {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\" font-family=\"sans-serif\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"32\" font-size=\"18\" text-anchor=\"middle\">" +
           escape(plot.title) + "</text>\n";

    // gridlines and tick labels
    for (int t = 0; t < kTicks; ++t) {
        const double frac = static_cast<double>(t) / (kTicks - 1);
        const double gx = kLeft + frac * (kRight - kLeft);
        const double gy = kBottom - frac * (kBottom - kTop);
        const double xv = x_min + frac * (x_max - x_min);
        const double yv = y_min + frac * (y_max - y_min);
        svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(gx) + "\" y2=\"" +
               px(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(gy) + "\" x2=\"" + px(kRight) +
               "\" y2=\"" + px(gy) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + px(gx) + "\" y=\"" + px(kBottom + 22.0) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + format_sig9(xv) + "</text>\n";
        svg += "<text x=\"" + px(kLeft - 10.0) + "\" y=\"" + px(gy + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\">" + format_sig9(yv) + "</text>\n";
    }

    if (plot.normalized_top_axis) {
        for (int t = 0; t < kTicks; ++t) {
            const double frac = static_cast<double>(t) / (kTicks - 1);
            const double gx = kLeft + frac * (kRight - kLeft);
            svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kTop - 6.0) + "\" x2=\"" + px(gx) +
                   "\" y2=\"" + px(kTop) + "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + px(gx) + "\" y=\"" + px(kTop - 10.0) +
                   "\" font-size=\"10\" fill=\"#555555\" text-anchor=\"middle\">" +
                   format_sig9(frac) + "</text>\n";
        }
        svg += "<text x=\"" + px(kRight + 6.0) + "\" y=\"" + px(kTop - 10.0) +
               "\" font-size=\"10\" fill=\"#555555\">normalized</text>\n";
    }

    // frame
    svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(kRight - kLeft) +
           "\" height=\"" + px(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    // axis labels
    svg += "<text x=\"" + px((kLeft + kRight) / 2.0) + "\" y=\"" + px(kBottom + 50.0) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
    svg += "<text x=\"24\" y=\"" + px((kTop + kBottom) / 2.0) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 24 " +
           px((kTop + kBottom) / 2.0) + ")\">" + escape(plot.y_label) + "</text>\n";

    // data
    if (plot.xs.size() >= 2) {
        svg += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < plot.xs.size(); ++i) {
            if (i > 0) {
                svg += ' ';
            }
            svg += px(to_px_x(plot.xs[i])) + "," + px(to_px_y(plot.ys[i]));
        }
        svg += "\"/>\n";
    } else if (plot.xs.size() == 1) {
        svg += "<circle cx=\"" + px(to_px_x(plot.xs[0])) + "\" cy=\"" + px(to_px_y(plot.ys[0])) +
               "\" r=\"4\" fill=\"#1f6fb2\"/>\n";
    }

    if (plot.marker.has_value()) {
        const double mx = to_px_x(plot.marker->x);
        const double my = to_px_y(plot.marker->y);
        svg += "<circle cx=\"" + px(mx) + "\" cy=\"" + px(my) +
               "\" r=\"5\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"2\"/>\n";
        const double label_y = my > kTop + 30.0 ? my - 12.0 : my + 20.0;
        svg += "<text x=\"" + px(mx) + "\" y=\"" + px(label_y) +
               "\" font-size=\"12\" fill=\"#c23b22\" text-anchor=\"middle\">" +
               escape(plot.marker->label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace lteval
