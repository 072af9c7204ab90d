#include "fri/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace fri {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sweep_levels(const InterpolationConfig& cfg,
                                 std::span<const FuzzySet> observation,
                                 std::initializer_list<const RuleView*> rules) {
    std::vector<FuzzySet> all(observation.begin(), observation.end());
    for (const RuleView* rule : rules) {
        all.insert(all.end(), rule->antecedents.begin(), rule->antecedents.end());
        all.push_back(rule->consequent);
    }
    return generate_levels(cfg.alpha_levels, all);
}

std::vector<AlphaCut> cuts_of(const FuzzySet& set, std::span<const double> levels) {
    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());
    for (double level : levels) cuts.push_back(set.alpha_cut(level));
    return cuts;
}

std::vector<std::vector<AlphaCut>> cuts_per_dim(std::span<const FuzzySet> sets,
                                                std::span<const double> levels) {
    std::vector<std::vector<AlphaCut>> cuts;
    cuts.reserve(sets.size());
    for (const auto& s : sets) cuts.push_back(cuts_of(s, levels));
    return cuts;
}

double norm_w(std::span<const double> values, double w) {
    if (values.size() == 1) return std::fabs(values[0]);
    double sum = 0.0;
    for (double v : values) sum += std::pow(std::fabs(v), w);
    return std::pow(sum, 1.0 / w);
}

// Power mean used to collapse per-dimension ratios to one scalar. The
// all-equal case maps to the shared value, which keeps boundary behaviour
// exact regardless of dimension count.
double aggregate_ratio(std::span<const double> values, double w,
                       std::vector<std::string>* notes) {
    if (values.size() == 1) return values[0];
    double sum = 0.0;
    bool clamped = false;
    for (double v : values) {
        if (v < 0.0) {
            clamped = true;
            v = 0.0;
        }
        sum += std::pow(v, w);
    }
    if (clamped && notes)
        notes->push_back("negative per-dimension ratio clamped to 0 before aggregation");
    return std::pow(sum / static_cast<double>(values.size()), 1.0 / w);
}

// Reciprocal-distance blend with the zero-distance limit convention:
// coincidence with a rule returns that rule's value exactly.
double reciprocal_blend(double v1, double v2, double d1, double d2) {
    if (d1 <= kZeroTol) return v1;
    if (d2 <= kZeroTol) return v2;
    return (v1 / d1 + v2 / d2) / (1.0 / d1 + 1.0 / d2);
}

// Observation/antecedent length ratio; 0/0 degenerates to 1 (both crisp on
// that side means nothing to rescale).
double length_ratio(double obs_len, double antecedent_len, const char* what) {
    if (antecedent_len <= kZeroTol) {
        if (obs_len <= kZeroTol) return 1.0;
        throw EvaluationError(EvaluationError::Code::FuzzinessUndefined,
                              std::string(what) + " undefined: antecedent side is crisp but "
                                                  "the observation is not");
    }
    return obs_len / antecedent_len;
}

double left_flank(const FuzzySet& set) {
    return set.alpha_cut(1.0).lower - set.alpha_cut(0.0).lower;
}

double right_flank(const FuzzySet& set) {
    return set.alpha_cut(0.0).upper - set.alpha_cut(1.0).upper;
}

bool monotone_project(std::vector<AlphaCut>& cuts) {
    bool changed = false;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (cuts[i].lower < cuts[i - 1].lower) {
            changed = changed || cuts[i - 1].lower - cuts[i].lower > kInvariantTol;
            cuts[i].lower = cuts[i - 1].lower;
        }
        if (cuts[i].upper > cuts[i - 1].upper) {
            changed = changed || cuts[i].upper - cuts[i - 1].upper > kInvariantTol;
            cuts[i].upper = cuts[i - 1].upper;
        }
        if (cuts[i].lower > cuts[i].upper) {
            changed = changed || cuts[i].lower - cuts[i].upper > kInvariantTol;
            const double mid = std::clamp(0.5 * (cuts[i].lower + cuts[i].upper),
                                          cuts[i - 1].lower, cuts[i - 1].upper);
            cuts[i].lower = mid;
            cuts[i].upper = mid;
        }
    }
    return changed;
}

OutputConclusion finalize(std::vector<AlphaCut> cuts, const InterpolationConfig& cfg,
                          std::vector<std::string> notes) {
    SetAssembly assembly = set_from_alpha_cuts(cuts, "B*");
    OutputConclusion out;
    out.fuzzy = std::move(assembly.set);
    out.cuts = std::move(cuts);
    out.abnormal = assembly.abnormal;
    out.notes = std::move(notes);
    if (out.abnormal) {
        out.crisp = kNaN;
        out.notes.push_back("abnormal conclusion: alpha cuts are inverted or not nested; "
                            "crisp value undefined");
    } else {
        out.crisp = cog_defuzzify(out.fuzzy, cfg.num_points);
    }
    return out;
}

void check_pair_dims(const FlankingPair& pair, std::span<const FuzzySet> observation) {
    if (pair.lower.antecedents.size() != observation.size() ||
        pair.upper.antecedents.size() != observation.size())
        throw EvaluationError(EvaluationError::Code::DimensionMismatch,
                              "flanking pair antecedent count differs from the observation's");
}

// Support-and-core characteristic rectangle (lo, core_lo, core_hi, hi).
std::array<double, 4> characteristic4(const FuzzySet& set) {
    const Interval sup = set.support();
    const Interval core = set.core();
    return {sup.lo, core.lo, core.hi, sup.hi};
}

} // namespace

OutputConclusion kh_interpolate(const FlankingPair& pair,
                                std::span<const FuzzySet> observation,
                                const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::vector<double> levels = sweep_levels(cfg, observation, {&pair.lower, &pair.upper});
    const std::size_t dims = observation.size();

    const auto obs_cuts = cuts_per_dim(observation, levels);
    const auto a1_cuts = cuts_per_dim(pair.lower.antecedents, levels);
    const auto a2_cuts = cuts_per_dim(pair.upper.antecedents, levels);
    const auto b1_cuts = cuts_of(pair.lower.consequent, levels);
    const auto b2_cuts = cuts_of(pair.upper.consequent, levels);

    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());
    std::vector<double> d1(dims), d2(dims);
    for (std::size_t l = 0; l < levels.size(); ++l) {
        for (std::size_t d = 0; d < dims; ++d) {
            d1[d] = obs_cuts[d][l].lower - a1_cuts[d][l].lower;
            d2[d] = obs_cuts[d][l].lower - a2_cuts[d][l].lower;
        }
        const double lo = reciprocal_blend(b1_cuts[l].lower, b2_cuts[l].lower,
                                           norm_w(d1, cfg.minkowski_w),
                                           norm_w(d2, cfg.minkowski_w));
        for (std::size_t d = 0; d < dims; ++d) {
            d1[d] = obs_cuts[d][l].upper - a1_cuts[d][l].upper;
            d2[d] = obs_cuts[d][l].upper - a2_cuts[d][l].upper;
        }
        const double hi = reciprocal_blend(b1_cuts[l].upper, b2_cuts[l].upper,
                                           norm_w(d1, cfg.minkowski_w),
                                           norm_w(d2, cfg.minkowski_w));
        cuts.push_back({levels[l], lo, hi});
    }
    return finalize(std::move(cuts), cfg, {});
}

OutputConclusion khstab_interpolate(std::span<const RuleView> rules,
                                    std::span<const FuzzySet> observation,
                                    const InterpolationConfig& cfg) {
    if (rules.size() < 2)
        throw EvaluationError(EvaluationError::Code::TooFewRules,
                              "stabilized interpolation requires >= 2 rules");
    const std::size_t dims = observation.size();
    for (const auto& rule : rules)
        if (rule.antecedents.size() != dims)
            throw EvaluationError(EvaluationError::Code::DimensionMismatch,
                                  "rule antecedent count differs from the observation's");

    std::vector<FuzzySet> all(observation.begin(), observation.end());
    for (const auto& rule : rules) {
        all.insert(all.end(), rule.antecedents.begin(), rule.antecedents.end());
        all.push_back(rule.consequent);
    }
    const std::vector<double> levels = generate_levels(cfg.alpha_levels, all);

    const auto obs_cuts = cuts_per_dim(observation, levels);
    std::vector<std::vector<std::vector<AlphaCut>>> rule_cuts;   // [rule][dim][level]
    std::vector<std::vector<AlphaCut>> cons_cuts;                // [rule][level]
    rule_cuts.reserve(rules.size());
    cons_cuts.reserve(rules.size());
    for (const auto& rule : rules) {
        rule_cuts.push_back(cuts_per_dim(rule.antecedents, levels));
        cons_cuts.push_back(cuts_of(rule.consequent, levels));
    }

    // The reciprocal distances are raised to the input dimension count.
    const double exponent = static_cast<double>(dims);
    std::vector<double> diff(dims);
    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());

    for (std::size_t l = 0; l < levels.size(); ++l) {
        double endpoints[2];
        for (int side = 0; side < 2; ++side) {
            double num = 0.0;
            double den = 0.0;
            std::optional<double> exact;
            for (std::size_t r = 0; r < rules.size() && !exact; ++r) {
                for (std::size_t d = 0; d < dims; ++d) {
                    const AlphaCut& o = obs_cuts[d][l];
                    const AlphaCut& a = rule_cuts[r][d][l];
                    diff[d] = side == 0 ? o.lower - a.lower : o.upper - a.upper;
                }
                const double dist = norm_w(diff, cfg.minkowski_w);
                const double value =
                    side == 0 ? cons_cuts[r][l].lower : cons_cuts[r][l].upper;
                if (dist <= kZeroTol) {
                    exact = value;
                    break;
                }
                const double weight = 1.0 / std::pow(dist, exponent);
                num += weight * value;
                den += weight;
            }
            endpoints[side] = exact ? *exact : num / den;
        }
        cuts.push_back({levels[l], endpoints[0], endpoints[1]});
    }
    return finalize(std::move(cuts), cfg, {});
}

OutputConclusion vkk_interpolate(const FlankingPair& pair,
                                 std::span<const FuzzySet> observation,
                                 const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::vector<double> levels = sweep_levels(cfg, observation, {&pair.lower, &pair.upper});
    const std::size_t dims = observation.size();

    const auto obs_cuts = cuts_per_dim(observation, levels);
    const auto a1_cuts = cuts_per_dim(pair.lower.antecedents, levels);
    const auto a2_cuts = cuts_per_dim(pair.upper.antecedents, levels);
    const auto b1_cuts = cuts_of(pair.lower.consequent, levels);
    const auto b2_cuts = cuts_of(pair.upper.consequent, levels);

    std::vector<std::string> notes;
    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());
    std::vector<double> dc1(dims), dc2(dims), ratios(dims);

    for (std::size_t l = 0; l < levels.size(); ++l) {
        for (std::size_t d = 0; d < dims; ++d) {
            dc1[d] = obs_cuts[d][l].centre() - a1_cuts[d][l].centre();
            dc2[d] = obs_cuts[d][l].centre() - a2_cuts[d][l].centre();
        }
        const double n1 = norm_w(dc1, cfg.minkowski_w);
        const double n2 = norm_w(dc2, cfg.minkowski_w);

        const double centre = reciprocal_blend(b1_cuts[l].centre(), b2_cuts[l].centre(), n1, n2);
        const double blended_width =
            reciprocal_blend(b1_cuts[l].width(), b2_cuts[l].width(), n1, n2);

        for (std::size_t d = 0; d < dims; ++d) {
            const double antecedent_width =
                reciprocal_blend(a1_cuts[d][l].width(), a2_cuts[d][l].width(), n1, n2);
            const double obs_width = obs_cuts[d][l].width();
            if (antecedent_width <= kZeroTol && obs_width > kZeroTol)
                throw EvaluationError(EvaluationError::Code::WidthRatioUndefined,
                                      "width ratio undefined: interpolated antecedent cut has "
                                      "zero width but the observation cut does not");
            ratios[d] = antecedent_width <= kZeroTol ? 1.0 : obs_width / antecedent_width;
        }
        const double width =
            blended_width * aggregate_ratio(ratios, cfg.minkowski_w, &notes);
        cuts.push_back({levels[l], centre - 0.5 * width, centre + 0.5 * width});
    }
    return finalize(std::move(cuts), cfg, std::move(notes));
}

OutputConclusion maci_interpolate(const FlankingPair& pair,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const double lambda = maci_lambda_core(pair, observation, cfg.rp_type);

    const std::vector<double> levels = sweep_levels(cfg, observation, {&pair.lower, &pair.upper});
    const auto b1_cuts = cuts_of(pair.lower.consequent, levels);
    const auto b2_cuts = cuts_of(pair.upper.consequent, levels);

    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l) {
        cuts.push_back({levels[l],
                        (1.0 - lambda) * b1_cuts[l].lower + lambda * b2_cuts[l].lower,
                        (1.0 - lambda) * b1_cuts[l].upper + lambda * b2_cuts[l].upper});
    }

    std::vector<std::string> notes;
    if (monotone_project(cuts))
        notes.push_back("coordinate vector projected to a monotone sequence");
    return finalize(std::move(cuts), cfg, std::move(notes));
}

OutputConclusion crf_interpolate(const FlankingPair& pair,
                                 std::span<const FuzzySet> observation,
                                 const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::size_t dims = observation.size();
    std::vector<std::string> notes;

    std::vector<double> lambda_lo(dims), lambda_hi(dims), rho_lo(dims), rho_hi(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const AlphaCut a1 = pair.lower.antecedents[d].alpha_cut(1.0);
        const AlphaCut a2 = pair.upper.antecedents[d].alpha_cut(1.0);
        const AlphaCut oc = observation[d].alpha_cut(1.0);
        const double span_lo = a2.lower - a1.lower;
        const double span_hi = a2.upper - a1.upper;
        if (std::fabs(span_lo) <= kZeroTol || std::fabs(span_hi) <= kZeroTol)
            throw EvaluationError(EvaluationError::Code::DegenerateRules,
                                  "antecedent cores coincide; core-distance ratio undefined");
        lambda_lo[d] = (oc.lower - a1.lower) / span_lo;
        lambda_hi[d] = (oc.upper - a1.upper) / span_hi;
        rho_lo[d] = length_ratio(left_flank(observation[d]),
                                 left_flank(pair.lower.antecedents[d]),
                                 "left relative fuzziness");
        rho_hi[d] = length_ratio(right_flank(observation[d]),
                                 right_flank(pair.upper.antecedents[d]),
                                 "right relative fuzziness");
    }

    const double w = cfg.minkowski_w;
    const double ll = aggregate_ratio(lambda_lo, w, &notes);
    const double lh = aggregate_ratio(lambda_hi, w, &notes);
    const double rl = aggregate_ratio(rho_lo, w, &notes);
    const double rh = aggregate_ratio(rho_hi, w, &notes);

    const AlphaCut b1c = pair.lower.consequent.alpha_cut(1.0);
    const AlphaCut b2c = pair.upper.consequent.alpha_cut(1.0);
    const double core_lo = b1c.lower + ll * (b2c.lower - b1c.lower);
    const double core_hi = b1c.upper + lh * (b2c.upper - b1c.upper);
    const double flank_lo = left_flank(pair.lower.consequent) * rl;
    const double flank_hi = right_flank(pair.upper.consequent) * rh;

    std::vector<AlphaCut> cuts{{0.0, core_lo - flank_lo, core_hi + flank_hi},
                               {1.0, core_lo, core_hi}};
    return finalize(std::move(cuts), cfg, std::move(notes));
}

OutputConclusion imul_interpolate(const FlankingPair& pair,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::size_t dims = observation.size();
    std::vector<std::string> notes;
    const double lc = maci_lambda_core(pair, observation, cfg.rp_type);

    std::vector<double> lambda_lo(dims), lambda_hi(dims), rho_lo(dims), rho_hi(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const AlphaCut a1 = pair.lower.antecedents[d].alpha_cut(1.0);
        const AlphaCut a2 = pair.upper.antecedents[d].alpha_cut(1.0);
        const AlphaCut oc = observation[d].alpha_cut(1.0);
        const double span_lo = a2.lower - a1.lower;
        const double span_hi = a2.upper - a1.upper;
        if (std::fabs(span_lo) <= kZeroTol || std::fabs(span_hi) <= kZeroTol)
            throw EvaluationError(EvaluationError::Code::DegenerateRules,
                                  "antecedent cores coincide; core-distance ratio undefined");
        lambda_lo[d] = (oc.lower - a1.lower) / span_lo;
        lambda_hi[d] = (oc.upper - a1.upper) / span_hi;

        const double blended_left = (1.0 - lc) * left_flank(pair.lower.antecedents[d]) +
                                    lc * left_flank(pair.upper.antecedents[d]);
        const double blended_right = (1.0 - lc) * right_flank(pair.lower.antecedents[d]) +
                                     lc * right_flank(pair.upper.antecedents[d]);
        rho_lo[d] = length_ratio(left_flank(observation[d]), blended_left,
                                 "left relative fuzziness");
        rho_hi[d] = length_ratio(right_flank(observation[d]), blended_right,
                                 "right relative fuzziness");
    }

    const double w = cfg.minkowski_w;
    const double ll = aggregate_ratio(lambda_lo, w, &notes);
    const double lh = aggregate_ratio(lambda_hi, w, &notes);
    const double rl = aggregate_ratio(rho_lo, w, &notes);
    const double rh = aggregate_ratio(rho_hi, w, &notes);

    const AlphaCut b1c = pair.lower.consequent.alpha_cut(1.0);
    const AlphaCut b2c = pair.upper.consequent.alpha_cut(1.0);
    const double core_lo = (1.0 - lc) * b1c.lower + lc * b2c.lower +
                           (lc - ll) * (b2c.lower + b1c.lower);
    const double core_hi = (1.0 - lc) * b1c.upper + lc * b2c.upper +
                           (lc - lh) * (b2c.upper + b1c.upper);

    const double flank_len_lo = (1.0 - lc) * left_flank(pair.lower.consequent) +
                                lc * left_flank(pair.upper.consequent);
    const double flank_len_hi = (1.0 - lc) * right_flank(pair.lower.consequent) +
                                lc * right_flank(pair.upper.consequent);
    const double lo = core_lo - flank_len_lo * (1.0 + std::fabs(rl - 1.0));
    const double hi = core_hi + flank_len_hi * (1.0 + std::fabs(rh - 1.0));

    std::vector<AlphaCut> cuts{{0.0, lo, hi}, {1.0, core_lo, core_hi}};
    return finalize(std::move(cuts), cfg, std::move(notes));
}

OutputConclusion gm_interpolate(const FlankingPair& pair,
                                std::span<const FuzzySet> observation,
                                const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::size_t dims = observation.size();
    std::vector<std::string> notes;
    const double lambda = gm_lambda(pair, observation, cfg);

    const std::vector<double> levels = sweep_levels(cfg, observation, {&pair.lower, &pair.upper});
    const auto obs_cuts = cuts_per_dim(observation, levels);
    const auto a1_cuts = cuts_per_dim(pair.lower.antecedents, levels);
    const auto a2_cuts = cuts_per_dim(pair.upper.antecedents, levels);
    const auto b1_cuts = cuts_of(pair.lower.consequent, levels);
    const auto b2_cuts = cuts_of(pair.upper.consequent, levels);

    std::vector<double> obs_rp(dims);
    for (std::size_t d = 0; d < dims; ++d)
        obs_rp[d] = representative_value(observation[d], cfg.rp_type);
    const double b_rp =
        (1.0 - lambda) * representative_value(pair.lower.consequent, cfg.rp_type) +
        lambda * representative_value(pair.upper.consequent, cfg.rp_type);

    std::vector<double> rho(dims);
    std::vector<AlphaCut> cuts;
    cuts.reserve(levels.size());

    for (std::size_t l = 0; l < levels.size(); ++l) {
        double endpoints[2];
        for (int side = 0; side < 2; ++side) {
            for (std::size_t d = 0; d < dims; ++d) {
                // The interpolated rule's antecedent sits at the observation's
                // reference point in this dimension.
                const double l_d = pair.lambdas[d];
                const double blended = side == 0
                    ? (1.0 - l_d) * a1_cuts[d][l].lower + l_d * a2_cuts[d][l].lower
                    : (1.0 - l_d) * a1_cuts[d][l].upper + l_d * a2_cuts[d][l].upper;
                const double obs_offset =
                    (side == 0 ? obs_cuts[d][l].lower : obs_cuts[d][l].upper) - obs_rp[d];
                const double blended_offset = blended - obs_rp[d];
                if (std::fabs(blended_offset) <= kZeroTol) {
                    if (std::fabs(obs_offset) <= kZeroTol) {
                        rho[d] = 1.0;
                    } else {
                        throw EvaluationError(
                            EvaluationError::Code::FuzzinessUndefined,
                            "shape transfer undefined: interpolated antecedent is crisp at "
                            "its reference point but the observation is not");
                    }
                } else {
                    rho[d] = obs_offset / blended_offset;
                }
            }
            const double blended_b = side == 0
                ? (1.0 - lambda) * b1_cuts[l].lower + lambda * b2_cuts[l].lower
                : (1.0 - lambda) * b1_cuts[l].upper + lambda * b2_cuts[l].upper;
            endpoints[side] =
                b_rp + (blended_b - b_rp) * aggregate_ratio(rho, cfg.minkowski_w, &notes);
        }
        cuts.push_back({levels[l], endpoints[0], endpoints[1]});
    }

    if (monotone_project(cuts))
        notes.push_back("coordinate vector projected to a monotone sequence");
    return finalize(std::move(cuts), cfg, std::move(notes));
}

OutputConclusion scalemove_interpolate(const FlankingPair& pair,
                                       std::span<const FuzzySet> observation,
                                       const InterpolationConfig& cfg) {
    check_pair_dims(pair, observation);
    const std::size_t dims = observation.size();

    auto require_simple = [](const FuzzySet& set) {
        if (set.size() > 4)
            throw EvaluationError(EvaluationError::Code::UnsupportedShape,
                                  "'" + set.label() + "' has more than 4 characteristic "
                                  "points; only singleton, triangular and trapezoidal sets "
                                  "are supported");
    };
    for (const auto& s : observation) require_simple(s);
    for (const auto& s : pair.lower.antecedents) require_simple(s);
    for (const auto& s : pair.upper.antecedents) require_simple(s);
    require_simple(pair.lower.consequent);
    require_simple(pair.upper.consequent);

    double lambda = scalemove_lambda_rep(pair, observation, cfg.minkowski_w);
    if (lambda < -kInvariantTol || lambda > 1.0 + kInvariantTol)
        throw EvaluationError(EvaluationError::Code::NotSurrounded,
                              "observation representative value is outside the flanking "
                              "rules' span");
    lambda = std::clamp(lambda, 0.0, 1.0);

    std::vector<std::string> notes;
    std::vector<double> scales(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const auto lo4 = characteristic4(pair.lower.antecedents[d]);
        const auto hi4 = characteristic4(pair.upper.antecedents[d]);
        const double blended_width =
            (1.0 - lambda) * (lo4[3] - lo4[0]) + lambda * (hi4[3] - hi4[0]);
        const double obs_width = observation[d].support().width();
        if (blended_width <= kZeroTol) {
            if (obs_width > kZeroTol)
                throw EvaluationError(EvaluationError::Code::ScaleUndefined,
                                      "scale rate undefined: blended antecedent support has "
                                      "zero width but the observation does not");
            scales[d] = 1.0;
        } else {
            scales[d] = obs_width / blended_width;
        }
    }
    const double scale = aggregate_ratio(scales, cfg.minkowski_w, &notes);

    const auto b1 = characteristic4(pair.lower.consequent);
    const auto b2 = characteristic4(pair.upper.consequent);
    std::array<double, 4> blended;
    for (std::size_t i = 0; i < 4; ++i) blended[i] = (1.0 - lambda) * b1[i] + lambda * b2[i];

    // Representative value over the distinct blended points, so scaling about
    // it leaves the conclusion's representative value at the blend position.
    double rep = 0.0;
    int distinct = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i > 0 && std::fabs(blended[i] - blended[i - 1]) <= kInvariantTol) continue;
        rep += blended[i];
        ++distinct;
    }
    rep /= static_cast<double>(distinct);

    std::array<double, 4> scaled;
    for (std::size_t i = 0; i < 4; ++i) scaled[i] = rep + scale * (blended[i] - rep);

    std::vector<AlphaCut> cuts{{0.0, scaled[0], scaled[3]}, {1.0, scaled[1], scaled[2]}};
    return finalize(std::move(cuts), cfg, std::move(notes));
}

} // namespace fri
