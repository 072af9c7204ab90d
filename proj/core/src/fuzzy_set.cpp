#include "fri/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fri {

namespace {

constexpr double kMergeTol = 1e-9;
constexpr double kLevelTol = 1e-12;

void append_merged(std::vector<Point>& pts, Point p) {
    if (!pts.empty() && std::fabs(pts.back().x - p.x) <= kMergeTol) {
        pts.back().mu = std::max(pts.back().mu, p.mu);
        return;
    }
    pts.push_back(p);
}

} // namespace

FuzzySet::FuzzySet(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {}

FuzzySet FuzzySet::singleton(double x, std::string label) {
    return FuzzySet({{x, 1.0}}, std::move(label));
}

FuzzySet FuzzySet::triangle(double left, double peak, double right, std::string label) {
    std::vector<Point> pts;
    append_merged(pts, {left, 0.0});
    append_merged(pts, {peak, 1.0});
    append_merged(pts, {right, 0.0});
    return FuzzySet(std::move(pts), std::move(label));
}

FuzzySet FuzzySet::trapezoid(double left, double core_lo, double core_hi, double right,
                             std::string label) {
    std::vector<Point> pts;
    append_merged(pts, {left, 0.0});
    append_merged(pts, {core_lo, 1.0});
    append_merged(pts, {core_hi, 1.0});
    append_merged(pts, {right, 0.0});
    return FuzzySet(std::move(pts), std::move(label));
}

double FuzzySet::membership(double x) const {
    if (points_.empty()) return 0.0;
    if (points_.size() == 1) return std::fabs(x - points_[0].x) <= kLevelTol ? 1.0 : 0.0;
    if (x < points_.front().x || x > points_.back().x) return 0.0;

    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const Point& p) { return v < p.x; });
    if (it == points_.begin()) return points_.front().mu;
    if (it == points_.end()) return points_.back().mu;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    const double dx = hi.x - lo.x;
    if (dx <= 0.0) return std::max(lo.mu, hi.mu);
    const double t = (x - lo.x) / dx;
    return lo.mu + t * (hi.mu - lo.mu);
}

AlphaCut FuzzySet::alpha_cut(double level) const {
    if (level < -kLevelTol || level > 1.0 + kLevelTol)
        throw std::domain_error("alpha level outside [0, 1]");
    level = std::clamp(level, 0.0, 1.0);
    if (points_.empty()) throw std::domain_error("alpha cut of an empty set");
    if (points_.size() == 1) return {level, points_[0].x, points_[0].x};

    const std::size_t n = points_.size();

    if (level <= kLevelTol) {
        // Support closure: trim zero-mu plateaus down to the last point that
        // touches the positive region.
        std::size_t i = 0;
        while (i < n && points_[i].mu <= kLevelTol) ++i;
        if (i == n) return {level, points_.front().x, points_.back().x};
        const double lower = (i == 0) ? points_[0].x : points_[i - 1].x;
        std::size_t j = n;
        while (j > 0 && points_[j - 1].mu <= kLevelTol) --j;
        const double upper = (j == n) ? points_[n - 1].x : points_[j].x;
        return {level, lower, upper};
    }

    // Rising side.
    std::size_t i = 0;
    while (i < n && points_[i].mu < level - kLevelTol) ++i;
    double lower;
    if (i >= n) {
        // Defensive: subnormal set, fall back to the highest point.
        std::size_t best = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (points_[k].mu > points_[best].mu) best = k;
        return {level, points_[best].x, points_[best].x};
    }
    if (i == 0) {
        lower = points_[0].x;
    } else {
        const Point& a = points_[i - 1];
        const Point& b = points_[i];
        const double dm = b.mu - a.mu;
        lower = dm <= kLevelTol ? b.x : a.x + (level - a.mu) / dm * (b.x - a.x);
    }

    // Falling side.
    std::size_t j = n;
    while (j > 0 && points_[j - 1].mu < level - kLevelTol) --j;
    double upper;
    if (j == n) {
        upper = points_[n - 1].x;
    } else {
        const Point& a = points_[j - 1];
        const Point& b = points_[j];
        const double dm = a.mu - b.mu;
        upper = dm <= kLevelTol ? a.x : a.x + (a.mu - level) / dm * (b.x - a.x);
    }
    return {level, lower, upper};
}

Interval FuzzySet::support() const {
    const AlphaCut c = alpha_cut(0.0);
    return {c.lower, c.upper};
}

Interval FuzzySet::core() const {
    const AlphaCut c = alpha_cut(1.0);
    return {c.lower, c.upper};
}

CnfReport validate_cnf(const FuzzySet& set) {
    CnfReport report;
    const auto& pts = set.points();
    if (pts.empty()) {
        report.issues.push_back({CnfIssue::Code::Empty, 0, "set has no points"});
        return report;
    }

    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double dx = pts[i].x - pts[i - 1].x;
        if (dx < -kInvariantTol) {
            report.issues.push_back({CnfIssue::Code::NonMonotoneX, i,
                                     "x decreases at point " + std::to_string(i)});
        } else if (dx <= kInvariantTol && std::fabs(pts[i].mu - pts[i - 1].mu) > kInvariantTol) {
            report.issues.push_back({CnfIssue::Code::NonMonotoneX, i,
                                     "vertical membership jump at point " + std::to_string(i)});
        }
    }

    double max_mu = 0.0;
    std::size_t max_at = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].mu < -kInvariantTol || pts[i].mu > 1.0 + kInvariantTol)
            report.issues.push_back({CnfIssue::Code::MuOutOfRange, i,
                                     "mu outside [0, 1] at point " + std::to_string(i)});
        if (pts[i].mu > max_mu) {
            max_mu = pts[i].mu;
            max_at = i;
        }
    }
    if (max_mu < 1.0 - kInvariantTol)
        report.issues.push_back({CnfIssue::Code::NotNormal, max_at,
                                 "max membership is " + std::to_string(max_mu) + ", not 1"});

    bool falling = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].mu > pts[i - 1].mu + kInvariantTol) {
            if (falling) {
                report.issues.push_back({CnfIssue::Code::NotConvex, i,
                                         "membership rises again at point " + std::to_string(i)});
                break;
            }
        } else if (pts[i].mu < pts[i - 1].mu - kInvariantTol) {
            falling = true;
        }
    }
    return report;
}

std::vector<double> breakpoint_levels(std::span<const FuzzySet> sets) {
    if (sets.empty()) throw std::domain_error("breakpoint_levels: no sets given");
    std::vector<double> levels{0.0, 1.0};
    for (const auto& s : sets)
        for (const auto& p : s.points()) levels.push_back(std::clamp(p.mu, 0.0, 1.0));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end(),
                             [](double a, double b) { return std::fabs(a - b) <= kLevelTol; }),
                 levels.end());
    return levels;
}

std::vector<double> generate_levels(const AlphaLevelScheme& scheme,
                                    std::span<const FuzzySet> sets) {
    if (scheme.kind == AlphaLevelScheme::Kind::Breakpoints) return breakpoint_levels(sets);
    if (scheme.count < 2) throw std::domain_error("user-defined level count must be >= 2");
    std::vector<double> levels(static_cast<std::size_t>(scheme.count));
    const double step = 1.0 / (scheme.count - 1);
    for (int i = 0; i < scheme.count; ++i) levels[static_cast<std::size_t>(i)] = i * step;
    levels.front() = 0.0;
    levels.back() = 1.0;
    return levels;
}

double representative_value(const FuzzySet& set, ReferencePointKind kind) {
    if (kind == ReferencePointKind::CoreCentre) return set.core().centre();
    double sum = 0.0;
    for (const auto& p : set.points()) sum += p.x;
    return sum / static_cast<double>(set.size());
}

std::vector<double> cog_sample_grid(const FuzzySet& set, int num_points) {
    if (num_points < 2) throw std::domain_error("cog sampling needs at least 2 points");
    const double lo = set.points().front().x;
    const double hi = set.points().back().x;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(num_points) + set.size());
    for (int i = 0; i < num_points; ++i)
        xs.push_back(lo + (hi - lo) * i / static_cast<double>(num_points - 1));
    for (const auto& p : set.points()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return std::fabs(a - b) <= 1e-12; }),
             xs.end());
    return xs;
}

double cog_defuzzify(const FuzzySet& set, int num_points) {
    if (set.empty()) throw std::domain_error("cog of an empty set");
    if (set.is_singleton()) return set.points()[0].x;

    const std::vector<double> xs = cog_sample_grid(set, num_points);
    double area = 0.0;
    double moment = 0.0;
    double prev_x = xs[0];
    double prev_mu = set.membership(prev_x);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x = xs[i];
        const double mu = set.membership(x);
        const double dx = x - prev_x;
        area += 0.5 * (prev_mu + mu) * dx;
        moment += 0.5 * (prev_x * prev_mu + x * mu) * dx;
        prev_x = x;
        prev_mu = mu;
    }
    if (area <= 0.0) {
        // Degenerate (zero-width) support; all mass at one abscissa.
        return 0.5 * (xs.front() + xs.back());
    }
    return moment / area;
}

EndpointDistances lower_upper_distance(const FuzzySet& a, const FuzzySet& b, double level) {
    const AlphaCut ca = a.alpha_cut(level);
    const AlphaCut cb = b.alpha_cut(level);
    return {cb.lower - ca.lower, cb.upper - ca.upper};
}

double minkowski_distance(std::span<const double> a, std::span<const double> b, double w) {
    if (a.size() != b.size()) throw std::domain_error("minkowski_distance: length mismatch");
    if (w < 1.0) throw std::domain_error("minkowski_distance: w must be >= 1");
    if (a.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::pow(std::fabs(a[i] - b[i]), w);
    return std::pow(sum, 1.0 / w);
}

SetAssembly set_from_alpha_cuts(std::span<const AlphaCut> cuts, std::string label) {
    if (cuts.empty()) throw std::domain_error("set_from_alpha_cuts: no cuts given");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i].level < cuts[i - 1].level - kLevelTol)
            throw std::invalid_argument("set_from_alpha_cuts: cuts not sorted by level");
    if (cuts.front().level > kLevelTol)
        throw std::domain_error("set_from_alpha_cuts: missing level 0");
    if (cuts.back().level < 1.0 - kLevelTol)
        throw std::domain_error("set_from_alpha_cuts: missing level 1");

    bool abnormal = false;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i].lower > cuts[i].upper + kInvariantTol) abnormal = true;
        if (i > 0) {
            if (cuts[i].lower < cuts[i - 1].lower - kInvariantTol) abnormal = true;
            if (cuts[i].upper > cuts[i - 1].upper + kInvariantTol) abnormal = true;
        }
    }

    std::vector<Point> pts;
    pts.reserve(cuts.size() * 2);
    for (const auto& c : cuts) append_merged(pts, {c.lower, c.level});
    for (std::size_t i = cuts.size(); i-- > 0;) append_merged(pts, {cuts[i].upper, cuts[i].level});

    // Levels contributed by one flank land mid-segment on the other; drop
    // such collinear points so the breakpoint list is canonical.
    if (!abnormal && pts.size() > 2) {
        std::vector<Point> pruned;
        pruned.reserve(pts.size());
        pruned.push_back(pts.front());
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            const Point& prev = pruned.back();
            const Point& next = pts[i + 1];
            const double dx = next.x - prev.x;
            bool collinear = false;
            if (dx > kMergeTol) {
                const double t = (pts[i].x - prev.x) / dx;
                const double predicted = prev.mu + t * (next.mu - prev.mu);
                collinear = std::fabs(predicted - pts[i].mu) <= kInvariantTol;
            }
            if (!collinear) pruned.push_back(pts[i]);
        }
        pruned.push_back(pts.back());
        pts = std::move(pruned);
    }
    return {FuzzySet(std::move(pts), std::move(label)), abnormal};
}

} // namespace fri
