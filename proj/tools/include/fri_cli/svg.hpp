#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fri/fuzzy_set.hpp"

namespace fri::cli {

struct PlotSeries {
    FuzzySet set;
    std::string colour = "#888888";
    double stroke_width = 1.0;
};

/// One diagram: a variable's universe with its membership functions and any
/// overlaid observation/conclusion sets.
struct PlotPanel {
    std::string title;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<PlotSeries> series;
};

struct PlotSpec {
    std::vector<PlotPanel> panels;
    int width = 760;
    int panel_height = 170;
};

/// Stacked panels as a single well-formed SVG document; every fuzzy set is
/// drawn as exactly one <polyline>.
void write_svg(std::ostream& os, const PlotSpec& spec);

} // namespace fri::cli
