#pragma once

// Shared helpers for the test and acceptance suites: fixture loading, random
// generators, an independent brute-force interpolation oracle and a small
// XML well-formedness checker. Everything here is test-only code.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fri/fis_format.hpp"
#include "fri/fuzzy_set.hpp"
#include "fri/interpolation.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(FRI_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Random convex normal sets.
//
// Flanks are strictly monotone (no interior plateaus): an alpha-cut table can
// only represent such flanks, which is exactly the class the reassembly
// round-trip is defined on.
inline fri::FuzzySet random_cnf_set(std::mt19937_64& rng, double lo, double hi) {
    const double width = hi - lo;
    const double a = uniform(rng, lo, hi - 0.2 * width);
    const double d = uniform(rng, a + 0.05 * width, hi);
    double b = uniform(rng, a, d);
    double c = uniform(rng, b, d);
    if (uniform(rng, 0.0, 1.0) < 0.4) c = b;   // triangular core

    std::vector<fri::Point> pts;
    pts.push_back({a, 0.0});
    const int left_extra = uniform_int(rng, 0, 3);
    if (b - a > 1e-3) {
        std::vector<double> mus;
        std::vector<double> xs;
        for (int i = 0; i < left_extra; ++i) {
            mus.push_back(uniform(rng, 0.05, 0.95));
            xs.push_back(uniform(rng, a + 1e-4, b - 1e-4));
        }
        std::sort(mus.begin(), mus.end());
        std::sort(xs.begin(), xs.end());
        for (int i = 0; i < left_extra; ++i) {
            // Keep both coordinates strictly increasing with a margin.
            if (!pts.empty() && (xs[static_cast<std::size_t>(i)] - pts.back().x < 1e-4 ||
                                 mus[static_cast<std::size_t>(i)] - pts.back().mu < 1e-3))
                continue;
            pts.push_back({xs[static_cast<std::size_t>(i)], mus[static_cast<std::size_t>(i)]});
        }
    }
    if (b - pts.back().x < 1e-4) b = pts.back().x + 1e-4;
    if (c < b) c = b;
    pts.push_back({b, 1.0});
    if (c > b) pts.push_back({c, 1.0});

    std::vector<fri::Point> tail;
    double right_end = std::max(d, c + 1e-4);
    tail.push_back({right_end, 0.0});
    const int right_extra = uniform_int(rng, 0, 3);
    if (right_end - c > 1e-3) {
        std::vector<double> mus;
        std::vector<double> xs;
        for (int i = 0; i < right_extra; ++i) {
            mus.push_back(uniform(rng, 0.05, 0.95));
            xs.push_back(uniform(rng, c + 1e-4, right_end - 1e-4));
        }
        std::sort(mus.rbegin(), mus.rend());
        std::sort(xs.begin(), xs.end());
        double prev_x = c;
        double prev_mu = 1.0;
        for (int i = 0; i < right_extra; ++i) {
            const double x = xs[static_cast<std::size_t>(i)];
            const double mu = mus[static_cast<std::size_t>(i)];
            if (x - prev_x < 1e-4 || prev_mu - mu < 1e-3) continue;
            pts.push_back({x, mu});
            prev_x = x;
            prev_mu = mu;
        }
    }
    pts.push_back(tail[0]);
    return fri::FuzzySet(std::move(pts), "S");
}

inline fri::FuzzySet random_triangle(std::mt19937_64& rng, double centre_lo, double centre_hi,
                                     double half_lo, double half_hi) {
    const double peak = uniform(rng, centre_lo, centre_hi);
    const double wl = uniform(rng, half_lo, half_hi);
    const double wr = uniform(rng, half_lo, half_hi);
    return fri::FuzzySet::triangle(peak - wl, peak, peak + wr);
}

// A 1-D two-rule system plus a surrounded observation.
struct SingleDimSystem {
    fri::RuleView rule1;
    fri::RuleView rule2;
    std::vector<fri::FuzzySet> observation;
};

// Identical antecedent/consequent partitions (B_i == A_i breakpoint for
// breakpoint); the class on which linear interpolation must reproduce the
// observation.
inline SingleDimSystem random_identity_system(std::mt19937_64& rng) {
    SingleDimSystem sys;
    const fri::FuzzySet a1 = random_triangle(rng, 0.0, 30.0, 1.0, 6.0);
    const fri::FuzzySet a2 = random_triangle(rng, 60.0, 100.0, 1.0, 6.0);
    sys.rule1 = {{a1}, a1, 1.0, 1};
    sys.rule2 = {{a2}, a2, 1.0, 2};
    const double p1 = a1.core().centre();
    const double p2 = a2.core().centre();
    const double peak = uniform(rng, p1 + 8.0, p2 - 8.0);
    const double wl = uniform(rng, 0.5, 6.0);
    const double wr = uniform(rng, 0.5, 6.0);
    sys.observation = {fri::FuzzySet::triangle(peak - wl, peak, peak + wr, "A*")};
    return sys;
}

// Wide antecedents with a narrow observation and unrelated consequents; the
// classic source of inverted linear-interpolation conclusions.
inline SingleDimSystem random_kh_abnormal_candidate(std::mt19937_64& rng) {
    SingleDimSystem sys;
    const fri::FuzzySet a1 = random_triangle(rng, 10.0, 25.0, 8.0, 16.0);
    const fri::FuzzySet a2 = random_triangle(rng, 70.0, 90.0, 8.0, 16.0);
    const fri::FuzzySet b1 = random_triangle(rng, 10.0, 40.0, 0.5, 3.0);
    const fri::FuzzySet b2 = random_triangle(rng, 50.0, 90.0, 0.5, 3.0);
    sys.rule1 = {{a1}, b1, 1.0, 1};
    sys.rule2 = {{a2}, b2, 1.0, 2};
    const double p1 = a1.core().centre();
    const double p2 = a2.core().centre();
    const double peak = uniform(rng, p1 + 2.0, p2 - 2.0);
    const double w = uniform(rng, 0.2, 2.0);
    sys.observation = {fri::FuzzySet::triangle(peak - w, peak, peak + w, "A*")};
    return sys;
}

// One base shape translated to four positions, with a width jitter factor.
// With jitter 0 the flank slopes match everywhere and linear interpolation is
// exact at every level; jitter controls how strongly the flanks bow.
inline SingleDimSystem random_congruent_system(std::mt19937_64& rng, double jitter) {
    const double half = uniform(rng, 3.0, 6.0);
    auto jittered = [&](double peak) {
        const double wl = half * (1.0 + uniform(rng, -jitter, jitter));
        const double wr = half * (1.0 + uniform(rng, -jitter, jitter));
        return fri::FuzzySet::triangle(peak - wl, peak, peak + wr);
    };
    const double p1 = uniform(rng, 10.0, 25.0);
    const double p2 = uniform(rng, 60.0, 85.0);
    const double shift = uniform(rng, -8.0, 8.0);
    SingleDimSystem sys;
    sys.rule1 = {{jittered(p1)}, jittered(p1 + shift), 1.0, 1};
    sys.rule2 = {{jittered(p2)}, jittered(p2 + shift), 1.0, 2};
    const double peak = uniform(rng, p1 + half + 1.0, p2 - half - 1.0);
    sys.observation = {jittered(peak)};
    return sys;
}

// ---------------------------------------------------------------------------
// Independent brute-force oracle for the linear (KH-style) methods.
//
// Triangles only, with analytic cut endpoints; no production code is reused
// on this path.
struct OracleTri {
    double l = 0.0;
    double p = 0.0;
    double r = 0.0;
};

inline OracleTri as_oracle_tri(const fri::FuzzySet& set) {
    const auto& pts = set.points();
    if (pts.size() == 3) return {pts[0].x, pts[1].x, pts[2].x};
    if (pts.size() == 1) return {pts[0].x, pts[0].x, pts[0].x};
    return {pts.front().x, pts[1].x, pts.back().x};
}

inline double oracle_tri_lo(const OracleTri& t, double a) { return t.l + a * (t.p - t.l); }
inline double oracle_tri_hi(const OracleTri& t, double a) { return t.r - a * (t.r - t.p); }

struct OracleCut {
    double level = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// Reciprocal-distance endpoint blend over all rules with weights 1/d^N
// (N = 1 here); with two rules this is the plain two-rule linear formula.
inline std::vector<OracleCut> oracle_linear_conclusion(const std::vector<OracleTri>& antecedents,
                                                       const std::vector<OracleTri>& consequents,
                                                       const OracleTri& obs, int level_count) {
    std::vector<OracleCut> cuts;
    cuts.reserve(static_cast<std::size_t>(level_count));
    for (int k = 0; k < level_count; ++k) {
        const double a = static_cast<double>(k) / (level_count - 1);
        double endpoint[2];
        for (int side = 0; side < 2; ++side) {
            const double xo = side == 0 ? oracle_tri_lo(obs, a) : oracle_tri_hi(obs, a);
            double num = 0.0;
            double den = 0.0;
            bool exact = false;
            for (std::size_t i = 0; i < antecedents.size() && !exact; ++i) {
                const double xa = side == 0 ? oracle_tri_lo(antecedents[i], a)
                                            : oracle_tri_hi(antecedents[i], a);
                const double xb = side == 0 ? oracle_tri_lo(consequents[i], a)
                                            : oracle_tri_hi(consequents[i], a);
                const double dist = std::fabs(xo - xa);
                if (dist <= 1e-12) {
                    endpoint[side] = xb;
                    exact = true;
                    break;
                }
                num += xb / dist;
                den += 1.0 / dist;
            }
            if (!exact) endpoint[side] = num / den;
        }
        cuts.push_back({a, endpoint[0], endpoint[1]});
    }
    return cuts;
}

// Membership of the conclusion described by a dense nested cut table, by
// inverse interpolation on whichever flank brackets x.
inline double oracle_membership(const std::vector<OracleCut>& cuts, double x) {
    const std::size_t n = cuts.size();
    if (x < cuts[0].lower || x > cuts[0].upper) return 0.0;
    if (x >= cuts[n - 1].lower && x <= cuts[n - 1].upper) return 1.0;
    double best = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (x >= cuts[k].lower && x < cuts[k + 1].lower) {
            const double dx = cuts[k + 1].lower - cuts[k].lower;
            const double t = dx <= 1e-15 ? 1.0 : (x - cuts[k].lower) / dx;
            best = std::max(best, cuts[k].level + t * (cuts[k + 1].level - cuts[k].level));
        }
        if (x <= cuts[k].upper && x > cuts[k + 1].upper) {
            const double dx = cuts[k].upper - cuts[k + 1].upper;
            const double t = dx <= 1e-15 ? 1.0 : (cuts[k].upper - x) / dx;
            best = std::max(best, cuts[k].level + t * (cuts[k + 1].level - cuts[k].level));
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Minimal XML well-formedness check: declaration/comments skipped, element
// tags balanced, attribute quoting honoured.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const std::size_t end = text.find("?>", i);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const std::size_t end = text.find("-->", i);
            if (end == std::string::npos) return false;
            i = end + 3;
            continue;
        }
        const bool closing = i + 1 < n && text[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        std::string name;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' ||
                         text[j] == '-' || text[j] == '_'))
            name += text[j++];
        if (name.empty()) return false;
        // Scan to the closing '>' honouring quoted attribute values.
        char quote = 0;
        bool self_closing = false;
        while (j < n) {
            const char c = text[j];
            if (quote) {
                if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (c == '>') {
                self_closing = j > 0 && text[j - 1] == '/';
                break;
            }
            ++j;
        }
        if (j >= n) return false;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
        i = j + 1;
    }
    return stack.empty();
}

inline std::size_t count_substring(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace testsupport
