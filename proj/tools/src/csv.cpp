#include "fri_cli/csv.hpp"

#include <charconv>
#include <string>

namespace fri::cli {

namespace {

std::string num(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

void write_conclusion_csv(std::ostream& os, const OutputConclusion& conclusion, int num_points) {
    os << "x,mu\n";
    if (conclusion.abnormal || conclusion.fuzzy.is_singleton()) {
        for (const Point& p : conclusion.fuzzy.points()) os << num(p.x) << ',' << num(p.mu) << '\n';
    } else {
        for (double x : cog_sample_grid(conclusion.fuzzy, num_points))
            os << num(x) << ',' << num(conclusion.fuzzy.membership(x)) << '\n';
    }
    os << '\n';
    os << "alpha,lower,upper\n";
    for (const AlphaCut& c : conclusion.cuts)
        os << num(c.level) << ',' << num(c.lower) << ',' << num(c.upper) << '\n';
}

} // namespace fri::cli
