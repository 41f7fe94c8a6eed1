#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lteval {

struct SvgMarker {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

/// Self-contained 800x600 line plot: inline styling, no external assets.
struct SvgPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    std::vector<double> xs;
    std::vector<double> ys;
    std::optional<SvgMarker> marker;
    bool normalized_top_axis = false;  // secondary [0,1] axis along the top edge
};

std::string render_svg_plot(const SvgPlot& plot);

} // namespace lteval
