#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fri {

/// Absolute tolerance used by geometric invariant checks (point ordering,
/// cut nesting). Endpoint arithmetic is allowed to wobble this much.
inline constexpr double kInvariantTol = 1e-9;

struct Point {
    double x = 0.0;
    double mu = 0.0;
    bool operator==(const Point&) const = default;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    double centre() const { return 0.5 * (lo + hi); }
    bool operator==(const Interval&) const = default;
};

/// One horizontal slice of a fuzzy set: the closure of {x : mu(x) >= level}.
struct AlphaCut {
    double level = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
    double centre() const { return 0.5 * (lower + upper); }
    bool operator==(const AlphaCut&) const = default;
};

/// How the alpha levels of an evaluation sweep are chosen: either the
/// membership values present at the sets' breakpoints, or `count` levels
/// spread uniformly over [0, 1].
struct AlphaLevelScheme {
    enum class Kind { Breakpoints, UserDefined };
    Kind kind = Kind::Breakpoints;
    int count = 101;

    static AlphaLevelScheme breakpoints() { return {}; }
    static AlphaLevelScheme user_defined(int n) { return {Kind::UserDefined, n}; }
    bool operator==(const AlphaLevelScheme&) const = default;
};

enum class ReferencePointKind {
    CoreCentre,
    CentroidOfCharacteristicPoints,
};

/// A convex, normal fuzzy set over a real universe, stored as an ordered
/// list of (x, mu) breakpoints with straight segments in between.
/// Construction does not validate; use validate_cnf() to check the shape.
/// Numeric queries (membership, alpha_cut, ...) assume a valid set.
class FuzzySet {
public:
    FuzzySet() = default;
    explicit FuzzySet(std::vector<Point> points, std::string label = {});

    static FuzzySet singleton(double x, std::string label = {});
    static FuzzySet triangle(double left, double peak, double right, std::string label = {});
    static FuzzySet trapezoid(double left, double core_lo, double core_hi, double right,
                              std::string label = {});

    const std::vector<Point>& points() const { return points_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    bool is_singleton() const { return points_.size() == 1; }

    /// Linear interpolation between the bracketing breakpoints; 0 outside
    /// the point span. Total on valid sets.
    double membership(double x) const;

    /// Closure of {x : mu(x) >= level}; level 0 yields the support closure.
    /// Throws std::domain_error for level outside [0, 1].
    AlphaCut alpha_cut(double level) const;

    Interval support() const;
    Interval core() const;

    bool operator==(const FuzzySet&) const = default;

private:
    std::vector<Point> points_;
    std::string label_;
};

/// Outcome of reassembling a set from per-level cuts. When the cuts are not
/// nested (or a cut is inverted) the raw polyline is kept for inspection and
/// `abnormal` is set instead of silently repairing the shape.
struct SetAssembly {
    FuzzySet set;
    bool abnormal = false;
};

struct CnfIssue {
    enum class Code {
        Empty,
        NonMonotoneX,
        MuOutOfRange,
        NotNormal,
        NotConvex,
    };
    Code code = Code::Empty;
    std::size_t index = 0;
    std::string message;
};

struct CnfReport {
    std::vector<CnfIssue> issues;
    bool valid() const { return issues.empty(); }
};

/// Diagnostic check of the convex-normal-form invariants: x ordering,
/// mu range, normality (max mu == 1) and unimodality.
CnfReport validate_cnf(const FuzzySet& set);

/// Sorted, deduplicated union of the mu values at the breakpoints of all
/// sets, always containing 0 and 1. Throws std::domain_error on empty input.
std::vector<double> breakpoint_levels(std::span<const FuzzySet> sets);

/// Levels for an evaluation sweep: breakpoint union or a uniform grid.
std::vector<double> generate_levels(const AlphaLevelScheme& scheme,
                                    std::span<const FuzzySet> sets);

/// Core-centre midpoint or the arithmetic mean of the characteristic points.
double representative_value(const FuzzySet& set, ReferencePointKind kind);

/// Sample abscissae used for centre-of-gravity quadrature: num_points uniform
/// samples over the point span, augmented with the set's own breakpoints so
/// the trapezoid rule is exact on piecewise-linear integrands.
std::vector<double> cog_sample_grid(const FuzzySet& set, int num_points);

/// Centre of gravity of the membership function by trapezoidal quadrature.
/// Singletons return their abscissa directly.
double cog_defuzzify(const FuzzySet& set, int num_points);

struct EndpointDistances {
    double lower = 0.0;
    double upper = 0.0;
};

/// Signed endpoint distances between the level cuts of two sets:
/// lower = inf(b) - inf(a), upper = sup(b) - sup(a). Callers take magnitudes
/// where an unsigned distance is needed; the sign carries flanking direction.
EndpointDistances lower_upper_distance(const FuzzySet& a, const FuzzySet& b, double level);

/// (sum |a_i - b_i|^w)^(1/w). Throws std::domain_error on length mismatch
/// or w < 1.
double minkowski_distance(std::span<const double> a, std::span<const double> b, double w);

/// Rebuild a piecewise-linear set from per-level cuts (sorted by level,
/// containing levels 0 and 1). Duplicate abscissae are merged; non-nested
/// cuts set the abnormal flag on the result.
SetAssembly set_from_alpha_cuts(std::span<const AlphaCut> cuts, std::string label = {});

} // namespace fri
