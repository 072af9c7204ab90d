#include "fri/interpolation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace fri {

namespace {

void check_config(const InterpolationConfig& cfg) {
    if (cfg.num_points < 2)
        throw EvaluationError(EvaluationError::Code::BadConfig,
                              "num_points must be >= 2");
    if (cfg.minkowski_w < 1.0)
        throw EvaluationError(EvaluationError::Code::BadConfig,
                              "minkowski w must be >= 1");
    if (cfg.alpha_levels.kind == AlphaLevelScheme::Kind::UserDefined &&
        cfg.alpha_levels.count < 2)
        throw EvaluationError(EvaluationError::Code::BadConfig,
                              "user-defined level count must be >= 2");
}

bool iequals(const std::string& a, const char* b) {
    std::size_t i = 0;
    for (; i < a.size() && b[i]; ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return i == a.size() && b[i] == '\0';
}

OutputConclusion dispatch(Method method, std::span<const RuleView> views,
                          std::span<const FuzzySet> obs_sets, const InterpolationConfig& cfg) {
    if (method == Method::KHstab) return khstab_interpolate(views, obs_sets, cfg);
    const FlankingPair pair = select_flanking_pair(views, obs_sets, cfg);
    switch (method) {
    case Method::KH: return kh_interpolate(pair, obs_sets, cfg);
    case Method::VKK: return vkk_interpolate(pair, obs_sets, cfg);
    case Method::MACI: return maci_interpolate(pair, obs_sets, cfg);
    case Method::CRF: return crf_interpolate(pair, obs_sets, cfg);
    case Method::IMUL: return imul_interpolate(pair, obs_sets, cfg);
    case Method::GM: return gm_interpolate(pair, obs_sets, cfg);
    case Method::ScaleMove: return scalemove_interpolate(pair, obs_sets, cfg);
    case Method::KHstab: break;
    }
    throw EvaluationError(EvaluationError::Code::BadConfig, "unknown method");
}

} // namespace

Conclusion evaluate(const FisDocument& fis, const ObsDocument& obs,
                    const InterpolationConfig& cfg) {
    check_config(cfg);
    if (obs.num_inputs != fis.num_inputs ||
        static_cast<int>(obs.observations.size()) != fis.num_inputs)
        throw EvaluationError(EvaluationError::Code::DimensionMismatch,
                              "observation has " + std::to_string(obs.num_inputs) +
                                  " inputs but the rule base declares " +
                                  std::to_string(fis.num_inputs));

    Conclusion conclusion;
    conclusion.method = cfg.method;

    std::vector<FuzzySet> obs_sets;
    obs_sets.reserve(obs.observations.size());
    for (const auto& decl : obs.observations) obs_sets.push_back(to_fuzzy_set(decl));

    std::vector<std::vector<FuzzySet>> input_sets(fis.inputs.size());
    for (std::size_t d = 0; d < fis.inputs.size(); ++d)
        for (const auto& mf : fis.inputs[d].mfs) input_sets[d].push_back(to_fuzzy_set(mf));
    std::vector<std::vector<FuzzySet>> output_sets(fis.outputs.size());
    for (std::size_t o = 0; o < fis.outputs.size(); ++o)
        for (const auto& mf : fis.outputs[o].mfs) output_sets[o].push_back(to_fuzzy_set(mf));

    if (!fis.defuzz_method.empty() && !iequals(fis.defuzz_method, "cog"))
        conclusion.diagnostics.push_back("defuzzification method '" + fis.defuzz_method +
                                         "' is not supported; using COG");
    for (std::size_t r = 0; r < fis.rules.size(); ++r)
        if (fis.rules[r].weight != 1.0)
            conclusion.diagnostics.push_back("rule " + std::to_string(r + 1) + ": weight " +
                                             std::to_string(fis.rules[r].weight) +
                                             " is treated as 1");

    for (std::size_t o = 0; o < fis.outputs.size(); ++o) {
        std::vector<RuleView> views;
        views.reserve(fis.rules.size());
        for (std::size_t r = 0; r < fis.rules.size(); ++r) {
            const Rule& rule = fis.rules[r];
            bool usable = true;
            for (std::size_t d = 0; d < rule.antecedents.size(); ++d) {
                if (rule.antecedents[d] == 0) {
                    conclusion.diagnostics.push_back(
                        "rule " + std::to_string(r + 1) + " skipped: input " +
                        std::to_string(d + 1) + " is not referenced (index 0)");
                    usable = false;
                    break;
                }
            }
            if (usable && rule.consequents[o] == 0) {
                conclusion.diagnostics.push_back(
                    "rule " + std::to_string(r + 1) + " skipped for output " +
                    std::to_string(o + 1) + ": consequent not referenced (index 0)");
                usable = false;
            }
            if (!usable) continue;

            RuleView view;
            view.index = static_cast<int>(r + 1);
            view.weight = rule.weight;
            for (std::size_t d = 0; d < rule.antecedents.size(); ++d)
                view.antecedents.push_back(
                    input_sets[d][static_cast<std::size_t>(rule.antecedents[d] - 1)]);
            view.consequent = output_sets[o][static_cast<std::size_t>(rule.consequents[o] - 1)];
            views.push_back(std::move(view));
        }

        if (views.size() < 2)
            throw EvaluationError(EvaluationError::Code::TooFewRules,
                                  "output " + std::to_string(o + 1) +
                                      ": fewer than 2 usable rules");

        OutputConclusion out = dispatch(cfg.method, views, obs_sets, cfg);
        if (fis.outputs.size() > 1)
            out.fuzzy.set_label("B*_" + std::to_string(o + 1));

        const std::string prefix =
            fis.outputs.size() > 1 ? "output " + std::to_string(o + 1) + ": " : "";
        for (auto& note : out.notes) conclusion.diagnostics.push_back(prefix + note);
        out.notes.clear();

        if (!out.abnormal &&
            (out.crisp < fis.outputs[o].range_lo - kInvariantTol ||
             out.crisp > fis.outputs[o].range_hi + kInvariantTol))
            conclusion.diagnostics.push_back(prefix + "crisp value " +
                                             std::to_string(out.crisp) +
                                             " lies outside the declared output range");
        conclusion.outputs.push_back(std::move(out));
    }
    return conclusion;
}

std::vector<BatchEntry> evaluate_batch(const FisDocument& fis,
                                       std::span<const ObsDocument> observations,
                                       const InterpolationConfig& cfg) {
    std::vector<BatchEntry> results;
    results.reserve(observations.size());
    for (const auto& obs : observations) {
        BatchEntry entry;
        try {
            entry.conclusion = evaluate(fis, obs, cfg);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        results.push_back(std::move(entry));
    }
    return results;
}

} // namespace fri
