#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fri/fis_format.hpp"
#include "fri/fuzzy_set.hpp"

namespace fri {

enum class Method { KH, KHstab, VKK, MACI, CRF, IMUL, GM, ScaleMove };

const char* method_name(Method method);
/// Case-insensitive; accepts "khstabilized" as an alias for KHstab.
std::optional<Method> method_from_name(const std::string& name);
std::span<const Method> all_methods();

struct InterpolationConfig {
    Method method = Method::KH;
    AlphaLevelScheme alpha_levels{};
    int num_points = 501;
    ReferencePointKind rp_type = ReferencePointKind::CoreCentre;
    double minkowski_w = 2.0;
};

/// One rule with its antecedent sets resolved, for a single output.
struct RuleView {
    std::vector<FuzzySet> antecedents;
    FuzzySet consequent;
    double weight = 1.0;
    int index = 0;   // 1-based position in the rule base, for diagnostics
};

/// The two rules surrounding the observation, with the per-dimension
/// reference-point ratios of the observation between them.
struct FlankingPair {
    RuleView lower;
    RuleView upper;
    std::vector<double> lambdas;
};

struct OutputConclusion {
    FuzzySet fuzzy;
    std::vector<AlphaCut> cuts;
    double crisp = 0.0;          // NaN when abnormal
    bool abnormal = false;
    std::vector<std::string> notes;
};

struct Conclusion {
    Method method = Method::KH;
    std::vector<OutputConclusion> outputs;
    std::vector<std::string> diagnostics;
};

class EvaluationError : public std::runtime_error {
public:
    enum class Code {
        DimensionMismatch,
        NotSurrounded,
        TooFewRules,
        DegenerateRules,
        WidthRatioUndefined,
        FuzzinessUndefined,
        ScaleUndefined,
        UnsupportedShape,
        BadConfig,
    };

    EvaluationError(Code code, const std::string& message);
    Code code() const { return code_; }

private:
    Code code_;
};

using Observation = std::vector<FuzzySet>;

/// Pick the rule pair surrounding the observation: among rules whose
/// antecedent reference points dominate (or are dominated by) the
/// observation's in every dimension, the nearest by Minkowski distance wins;
/// ties break toward the lowest rule index. Throws NotSurrounded when either
/// side is empty.
FlankingPair select_flanking_pair(std::span<const RuleView> rules,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg);

/// Linear alpha-cut interpolation between the flanking pair: each conclusion
/// endpoint is the reciprocal-distance blend of the two consequent endpoints.
/// Coincidence with a rule endpoint returns that consequent endpoint exactly.
OutputConclusion kh_interpolate(const FlankingPair& pair,
                                std::span<const FuzzySet> observation,
                                const InterpolationConfig& cfg);

/// Stabilized variant: reciprocal distances over ALL rules, raised to the
/// power of the input dimension count.
OutputConclusion khstab_interpolate(std::span<const RuleView> rules,
                                    std::span<const FuzzySet> observation,
                                    const InterpolationConfig& cfg);

/// Cut centres are blended with reciprocal centre distances; cut widths scale
/// the blended consequent width by the observation/antecedent width ratio.
OutputConclusion vkk_interpolate(const FlankingPair& pair,
                                 std::span<const FuzzySet> observation,
                                 const InterpolationConfig& cfg);

/// Coordinate-vector blend of the consequents at lambda_core, with a monotone
/// projection that keeps the conclusion a valid convex set.
OutputConclusion maci_interpolate(const FlankingPair& pair,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg);

/// Core endpoints mapped by core-distance ratios; flank lengths conserve the
/// observation/antecedent relative fuzziness per side.
OutputConclusion crf_interpolate(const FlankingPair& pair,
                                 std::span<const FuzzySet> observation,
                                 const InterpolationConfig& cfg);

/// Core endpoints blended at lambda_core with a per-side correction term;
/// flanks lengthen with the deviation of the observation's fuzziness from the
/// blended antecedent's.
OutputConclusion imul_interpolate(const FlankingPair& pair,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg);

/// Two steps: interpolate a rule at the observation's position, then transfer
/// the observation/antecedent shape mismatch onto its consequent per level.
OutputConclusion gm_interpolate(const FlankingPair& pair,
                                std::span<const FuzzySet> observation,
                                const InterpolationConfig& cfg);

/// Two steps: blend the pair's characteristic points at lambda_rep, then
/// scale the blended consequent about its representative value by the
/// observation/antecedent support-width ratio. Sets must be singleton,
/// triangular or trapezoidal.
OutputConclusion scalemove_interpolate(const FlankingPair& pair,
                                       std::span<const FuzzySet> observation,
                                       const InterpolationConfig& cfg);

/// Euclidean reference-point ratio ||RP(obs)-RP(lower)|| / ||RP(upper)-RP(lower)||.
double maci_lambda_core(const FlankingPair& pair, std::span<const FuzzySet> observation,
                        ReferencePointKind rp_type);

/// Minkowski reference-point ratio used by the general method, with the
/// configured reference-point kind.
double gm_lambda(const FlankingPair& pair, std::span<const FuzzySet> observation,
                 const InterpolationConfig& cfg);

/// Characteristic-point-centroid ratio used by the scale/move method.
double scalemove_lambda_rep(const FlankingPair& pair, std::span<const FuzzySet> observation,
                            double minkowski_w);

/// Full evaluation of a parsed rule base against a parsed observation:
/// flanking selection (except KHstab), method dispatch per output,
/// defuzzification and diagnostics.
Conclusion evaluate(const FisDocument& fis, const ObsDocument& obs,
                    const InterpolationConfig& cfg);

struct BatchEntry {
    std::optional<Conclusion> conclusion;
    std::string error;   // empty on success
    bool ok() const { return conclusion.has_value(); }
};

/// Row-by-row evaluation; a failing row reports its error without aborting
/// the remaining rows.
std::vector<BatchEntry> evaluate_batch(const FisDocument& fis,
                                       std::span<const ObsDocument> observations,
                                       const InterpolationConfig& cfg);

} // namespace fri
