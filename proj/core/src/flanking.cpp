#include "fri/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>

namespace fri {

namespace {

constexpr double kZeroTol = 1e-12;

std::string lower_copy(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<double> rp_vector(std::span<const FuzzySet> sets, ReferencePointKind kind) {
    std::vector<double> rp;
    rp.reserve(sets.size());
    for (const auto& s : sets) rp.push_back(representative_value(s, kind));
    return rp;
}

struct Candidate {
    std::size_t rule = 0;
    double distance = 0.0;
};

// Nearest candidate; the ascending scan plus strict comparison makes ties
// resolve to the lowest rule index.
std::optional<Candidate> nearest(const std::vector<Candidate>& candidates,
                                 std::size_t exclude = std::numeric_limits<std::size_t>::max()) {
    std::optional<Candidate> best;
    for (const auto& c : candidates) {
        if (c.rule == exclude) continue;
        if (!best || c.distance < best->distance) best = c;
    }
    return best;
}

} // namespace

const char* method_name(Method method) {
    switch (method) {
    case Method::KH: return "KH";
    case Method::KHstab: return "KHstab";
    case Method::VKK: return "VKK";
    case Method::MACI: return "MACI";
    case Method::CRF: return "CRF";
    case Method::IMUL: return "IMUL";
    case Method::GM: return "GM";
    case Method::ScaleMove: return "ScaleMove";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    const std::string n = lower_copy(name);
    if (n == "kh") return Method::KH;
    if (n == "khstab" || n == "khstabilized") return Method::KHstab;
    if (n == "vkk") return Method::VKK;
    if (n == "maci") return Method::MACI;
    if (n == "crf") return Method::CRF;
    if (n == "imul") return Method::IMUL;
    if (n == "gm") return Method::GM;
    if (n == "scalemove") return Method::ScaleMove;
    return std::nullopt;
}

std::span<const Method> all_methods() {
    static const std::array<Method, 8> methods{Method::KH,   Method::KHstab, Method::VKK,
                                               Method::MACI, Method::CRF,    Method::IMUL,
                                               Method::GM,   Method::ScaleMove};
    return methods;
}

EvaluationError::EvaluationError(Code code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

FlankingPair select_flanking_pair(std::span<const RuleView> rules,
                                  std::span<const FuzzySet> observation,
                                  const InterpolationConfig& cfg) {
    if (rules.size() < 2)
        throw EvaluationError(EvaluationError::Code::TooFewRules,
                              "flanking selection requires at least 2 rules");
    const std::size_t dims = observation.size();
    for (const auto& rule : rules)
        if (rule.antecedents.size() != dims)
            throw EvaluationError(EvaluationError::Code::DimensionMismatch,
                                  "rule antecedent count differs from the observation's");

    const std::vector<double> obs_rp = rp_vector(observation, cfg.rp_type);
    std::vector<std::vector<double>> rule_rp(rules.size());
    std::vector<Candidate> below;
    std::vector<Candidate> above;

    for (std::size_t r = 0; r < rules.size(); ++r) {
        rule_rp[r] = rp_vector(rules[r].antecedents, cfg.rp_type);
        bool dominates_below = true;
        bool dominates_above = true;
        for (std::size_t d = 0; d < dims; ++d) {
            if (rule_rp[r][d] > obs_rp[d] + kInvariantTol) dominates_below = false;
            if (rule_rp[r][d] < obs_rp[d] - kInvariantTol) dominates_above = false;
        }
        if (!dominates_below && !dominates_above) continue;
        const double dist = minkowski_distance(rule_rp[r], obs_rp, cfg.minkowski_w);
        if (dominates_below) below.push_back({r, dist});
        if (dominates_above) above.push_back({r, dist});
    }

    auto lower = nearest(below);
    auto upper = nearest(above);
    if (!lower || !upper)
        throw EvaluationError(EvaluationError::Code::NotSurrounded,
                              "observation not surrounded by rule antecedents "
                              "(extrapolation unsupported)");

    if (lower->rule == upper->rule) {
        // The observation coincides with one rule's reference points; keep
        // that rule on one side and take the runner-up on the other.
        if (auto second_above = nearest(above, lower->rule)) {
            upper = second_above;
        } else if (auto second_below = nearest(below, upper->rule)) {
            lower = second_below;
        } else {
            throw EvaluationError(EvaluationError::Code::NotSurrounded,
                                  "only one rule flanks the observation");
        }
    }

    FlankingPair pair;
    pair.lower = rules[lower->rule];
    pair.upper = rules[upper->rule];
    pair.lambdas.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const double span = rule_rp[upper->rule][d] - rule_rp[lower->rule][d];
        const double offset = obs_rp[d] - rule_rp[lower->rule][d];
        pair.lambdas[d] = std::fabs(span) <= kZeroTol ? 0.0 : std::clamp(offset / span, 0.0, 1.0);
    }
    return pair;
}

double maci_lambda_core(const FlankingPair& pair, std::span<const FuzzySet> observation,
                        ReferencePointKind rp_type) {
    const std::vector<double> obs_rp = rp_vector(observation, rp_type);
    const std::vector<double> lo_rp = rp_vector(pair.lower.antecedents, rp_type);
    const std::vector<double> hi_rp = rp_vector(pair.upper.antecedents, rp_type);
    const double num = minkowski_distance(obs_rp, lo_rp, 2.0);
    const double den = minkowski_distance(hi_rp, lo_rp, 2.0);
    if (den <= kZeroTol)
        throw EvaluationError(EvaluationError::Code::DegenerateRules,
                              "flanking rules share their reference points");
    return num / den;
}

double gm_lambda(const FlankingPair& pair, std::span<const FuzzySet> observation,
                 const InterpolationConfig& cfg) {
    const std::vector<double> obs_rp = rp_vector(observation, cfg.rp_type);
    const std::vector<double> lo_rp = rp_vector(pair.lower.antecedents, cfg.rp_type);
    const std::vector<double> hi_rp = rp_vector(pair.upper.antecedents, cfg.rp_type);
    const double num = minkowski_distance(obs_rp, lo_rp, cfg.minkowski_w);
    const double den = minkowski_distance(hi_rp, lo_rp, cfg.minkowski_w);
    if (den <= kZeroTol)
        throw EvaluationError(EvaluationError::Code::DegenerateRules,
                              "flanking rules share their reference points");
    return num / den;
}

double scalemove_lambda_rep(const FlankingPair& pair, std::span<const FuzzySet> observation,
                            double minkowski_w) {
    const auto kind = ReferencePointKind::CentroidOfCharacteristicPoints;
    const std::vector<double> obs_rp = rp_vector(observation, kind);
    const std::vector<double> lo_rp = rp_vector(pair.lower.antecedents, kind);
    const std::vector<double> hi_rp = rp_vector(pair.upper.antecedents, kind);
    const double num = minkowski_distance(obs_rp, lo_rp, minkowski_w);
    const double den = minkowski_distance(hi_rp, lo_rp, minkowski_w);
    if (den <= kZeroTol)
        throw EvaluationError(EvaluationError::Code::DegenerateRules,
                              "flanking rules share their representative values");
    return num / den;
}

} // namespace fri
