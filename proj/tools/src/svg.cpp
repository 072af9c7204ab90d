#include "fri_cli/svg.hpp"

#include <charconv>

namespace fri::cli {

namespace {

constexpr double kMarginLeft = 46.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 28.0;
constexpr double kMarginBottom = 26.0;

std::string num(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void write_svg(std::ostream& os, const PlotSpec& spec) {
    const double width = spec.width;
    const double panel_h = spec.panel_height;
    const double height = panel_h * static_cast<double>(spec.panels.size());

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
       << static_cast<int>(height) << "\" viewBox=\"0 0 " << spec.width << ' '
       << static_cast<int>(height) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
       << static_cast<int>(height) << "\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < spec.panels.size(); ++p) {
        const PlotPanel& panel = spec.panels[p];
        const double top = panel_h * static_cast<double>(p) + kMarginTop;
        const double bottom = panel_h * static_cast<double>(p + 1) - kMarginBottom;
        const double left = kMarginLeft;
        const double right = width - kMarginRight;
        const double span = panel.hi - panel.lo;

        auto sx = [&](double x) {
            return span <= 0.0 ? left : left + (x - panel.lo) / span * (right - left);
        };
        auto sy = [&](double mu) { return bottom - mu * (bottom - top); };

        os << "<g>\n";
        os << "<text x=\"" << num(left) << "\" y=\"" << num(top - 10.0)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(panel.title)
           << "</text>\n";
        // Axes.
        os << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right)
           << "\" y2=\"" << num(bottom) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        os << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
           << "\" y2=\"" << num(bottom) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << num(left) << "\" y=\"" << num(bottom + 14.0)
           << "\" font-family=\"sans-serif\" font-size=\"10\">" << num(panel.lo) << "</text>\n";
        os << "<text x=\"" << num(right - 24.0) << "\" y=\"" << num(bottom + 14.0)
           << "\" font-family=\"sans-serif\" font-size=\"10\">" << num(panel.hi) << "</text>\n";
        os << "<text x=\"" << num(left - 14.0) << "\" y=\"" << num(top + 4.0)
           << "\" font-family=\"sans-serif\" font-size=\"10\">1</text>\n";
        os << "<text x=\"" << num(left - 14.0) << "\" y=\"" << num(bottom + 4.0)
           << "\" font-family=\"sans-serif\" font-size=\"10\">0</text>\n";

        for (const PlotSeries& series : panel.series) {
            os << "<polyline fill=\"none\" stroke=\"" << escape(series.colour)
               << "\" stroke-width=\"" << num(series.stroke_width) << "\" points=\"";
            if (series.set.is_singleton()) {
                // Draw the spike down to the baseline so it is visible.
                const double x = series.set.points()[0].x;
                os << num(sx(x)) << ',' << num(sy(0.0)) << ' ' << num(sx(x)) << ','
                   << num(sy(1.0));
            } else {
                bool first = true;
                for (const Point& pt : series.set.points()) {
                    if (!first) os << ' ';
                    os << num(sx(pt.x)) << ',' << num(sy(pt.mu));
                    first = false;
                }
            }
            os << "\"/>\n";
            if (!series.set.label().empty()) {
                const Point& anchor = series.set.points()[series.set.size() / 2];
                os << "<text x=\"" << num(sx(anchor.x) + 2.0) << "\" y=\""
                   << num(sy(anchor.mu) - 3.0)
                   << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\""
                   << escape(series.colour) << "\">" << escape(series.set.label())
                   << "</text>\n";
            }
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
}

} // namespace fri::cli
