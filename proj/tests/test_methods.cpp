#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "fri/interpolation.hpp"
#include "support.hpp"

using namespace fri;
using namespace testsupport;

namespace {

FisDocument fis1() { return parse_fis(slurp(fixture_path("fis1.fis"))); }
ObsDocument obs1() { return parse_obs(slurp(fixture_path("obs1.obs"))); }
FisDocument fis2() { return parse_fis(slurp(fixture_path("fis2.fis"))); }
ObsDocument obs2() { return parse_obs(slurp(fixture_path("obs2.obs"))); }

std::vector<RuleView> views_for(const FisDocument& fis, std::size_t output = 0) {
    std::vector<RuleView> views;
    for (std::size_t r = 0; r < fis.rules.size(); ++r) {
        RuleView view;
        view.index = static_cast<int>(r + 1);
        view.weight = fis.rules[r].weight;
        for (std::size_t d = 0; d < fis.inputs.size(); ++d)
            view.antecedents.push_back(to_fuzzy_set(
                fis.inputs[d].mfs[static_cast<std::size_t>(fis.rules[r].antecedents[d] - 1)]));
        view.consequent = to_fuzzy_set(
            fis.outputs[output].mfs[static_cast<std::size_t>(fis.rules[r].consequents[output] - 1)]);
        views.push_back(std::move(view));
    }
    return views;
}

std::vector<FuzzySet> sets_of(const ObsDocument& obs) {
    std::vector<FuzzySet> sets;
    for (const auto& decl : obs.observations) sets.push_back(to_fuzzy_set(decl));
    return sets;
}

void check_points(const FuzzySet& actual, const std::vector<Point>& expected, double tol = 1e-9) {
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::fabs(actual.points()[i].x - expected[i].x) <= tol);
        CHECK(std::fabs(actual.points()[i].mu - expected[i].mu) <= tol);
    }
}

using MethodFn = OutputConclusion (*)(const FlankingPair&, std::span<const FuzzySet>,
                                      const InterpolationConfig&);

OutputConclusion run_method(Method method, std::span<const RuleView> views,
                            std::span<const FuzzySet> obs, const InterpolationConfig& base) {
    InterpolationConfig cfg = base;
    cfg.method = method;
    if (method == Method::KHstab) return khstab_interpolate(views, obs, cfg);
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);
    switch (method) {
    case Method::KH: return kh_interpolate(pair, obs, cfg);
    case Method::VKK: return vkk_interpolate(pair, obs, cfg);
    case Method::MACI: return maci_interpolate(pair, obs, cfg);
    case Method::CRF: return crf_interpolate(pair, obs, cfg);
    case Method::IMUL: return imul_interpolate(pair, obs, cfg);
    case Method::GM: return gm_interpolate(pair, obs, cfg);
    default: return scalemove_interpolate(pair, obs, cfg);
    }
}

} // namespace

TEST_CASE("flanking selection picks the nearest dominating rules") {
    const InterpolationConfig cfg;

    const auto v1 = views_for(fis1());
    const auto o1 = sets_of(obs1());
    const FlankingPair p1 = select_flanking_pair(v1, o1, cfg);
    CHECK(p1.lower.index == 1);
    CHECK(p1.upper.index == 2);
    REQUIRE(p1.lambdas.size() == 1);
    CHECK(p1.lambdas[0] == doctest::Approx(17.0 / 32.0));

    // Rule 2 of the two-input base sits below the observation in one
    // dimension only, so it cannot flank; rules 1 and 3 do.
    const auto v2 = views_for(fis2());
    const auto o2 = sets_of(obs2());
    const FlankingPair p2 = select_flanking_pair(v2, o2, cfg);
    CHECK(p2.lower.index == 1);
    CHECK(p2.upper.index == 3);

    // An observation left of every antecedent cannot be surrounded.
    const std::vector<FuzzySet> outside{FuzzySet::triangle(0, 1, 2)};
    CHECK_THROWS_AS((void)select_flanking_pair(v1, outside, cfg), EvaluationError);

    // Coincidence with a rule keeps that rule on one side.
    const std::vector<FuzzySet> at_a2{FuzzySet::triangle(37, 42, 47)};
    const FlankingPair p3 = select_flanking_pair(v1, at_a2, cfg);
    CHECK(p3.lower.index == 1);
    CHECK(p3.upper.index == 2);
}

TEST_CASE("KH reproduces the observation under identical partitions") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    const OutputConclusion out = kh_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    check_points(out.fuzzy, {{17, 0}, {27, 1}, {37, 0}});
    CHECK(out.crisp == doctest::Approx(27.0).epsilon(1e-9));

    // Hand-evaluated endpoint at level 0: (5/12 + 37/20) / (1/12 + 1/20).
    REQUIRE(out.cuts.size() == 2);
    CHECK(out.cuts[0].level == 0.0);
    CHECK(std::fabs(out.cuts[0].lower - 17.0) <= 1e-9);
    CHECK(std::fabs(out.cuts[0].upper - 37.0) <= 1e-9);

    // Observation equal to an antecedent returns that consequent exactly.
    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    check_points(kh_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});
}

TEST_CASE("KHstab matches KH endpoint for endpoint on two-rule one-input bases") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    const OutputConclusion kh = kh_interpolate(pair, obs, cfg);
    const OutputConclusion stab = khstab_interpolate(views, obs, cfg);
    REQUIRE(kh.cuts.size() == stab.cuts.size());
    for (std::size_t i = 0; i < kh.cuts.size(); ++i) {
        CHECK(std::fabs(kh.cuts[i].lower - stab.cuts[i].lower) <= 1e-9);
        CHECK(std::fabs(kh.cuts[i].upper - stab.cuts[i].upper) <= 1e-9);
    }

    const std::vector<FuzzySet> at_a2{FuzzySet::triangle(37, 42, 47)};
    check_points(khstab_interpolate(views, at_a2, cfg).fuzzy, {{37, 0}, {42, 1}, {47, 0}});

    const std::vector<RuleView> single{views[0]};
    CHECK_THROWS_AS((void)khstab_interpolate(single, obs, cfg), EvaluationError);
}

TEST_CASE("VKK interpolates centres and rescales widths") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    const OutputConclusion out = vkk_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    for (const AlphaCut& cut : out.cuts) CHECK(cut.centre() == doctest::Approx(27.0));
    CHECK(out.cuts[0].width() == doctest::Approx(20.0));
    CHECK(out.crisp == doctest::Approx(27.0).epsilon(1e-9));

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    check_points(vkk_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});
}

TEST_CASE("MACI blends consequent coordinates at the core ratio") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    CHECK(maci_lambda_core(pair, obs, cfg.rp_type) == doctest::Approx(0.53125).epsilon(1e-12));
    const OutputConclusion out = maci_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    check_points(out.fuzzy, {{22, 0}, {27, 1}, {32, 0}});

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    CHECK(maci_lambda_core(bpair, at_a1, cfg.rp_type) == doctest::Approx(0.0));
    check_points(maci_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});

    // Two-input derivation: Euclidean ratio of the reference-point offsets.
    const auto v2 = views_for(fis2());
    const auto o2 = sets_of(obs2());
    const FlankingPair p2 = select_flanking_pair(v2, o2, cfg);
    const double expected = std::sqrt((10.5 * 10.5 + 29.5 * 29.5) / (2.0 * 40.5 * 40.5));
    CHECK(maci_lambda_core(p2, o2, cfg.rp_type) == doctest::Approx(expected).epsilon(1e-12));
    const OutputConclusion out2 = maci_interpolate(p2, o2, cfg);
    const double l = maci_lambda_core(p2, o2, cfg.rp_type);
    check_points(out2.fuzzy, {{3 + 40 * l, 0}, {8 + 40 * l, 1}, {12 + 41 * l, 1}, {17 + 41 * l, 0}});
}

TEST_CASE("CRF maps the core and conserves relative fuzziness") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    const OutputConclusion out = crf_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    // Core at the 17/32 ratio of the consequent span; both flanks inherit the
    // observation's fuzziness of 10 because the partitions are identical.
    check_points(out.fuzzy, {{17, 0}, {27, 1}, {37, 0}});

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    check_points(crf_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});
}

TEST_CASE("IMUL core lands on the blend when the side ratios agree") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    const OutputConclusion out = imul_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    CHECK(std::fabs(out.fuzzy.core().centre() - 27.0) <= 1e-9);

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    check_points(imul_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});

    // On the two-input example the conclusion must stay a valid set in range.
    const auto v2 = views_for(fis2());
    const auto o2 = sets_of(obs2());
    const FlankingPair p2 = select_flanking_pair(v2, o2, cfg);
    const OutputConclusion out2 = imul_interpolate(p2, o2, cfg);
    CHECK(!out2.abnormal);
    CHECK(validate_cnf(out2.fuzzy).valid());
    CHECK(out2.fuzzy.points().front().x >= 0.0);
    CHECK(out2.fuzzy.points().back().x <= 80.0);
}

TEST_CASE("GM positions a new rule at the observation") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    // d(A1, A2) = |42 - 10| = 32 under the core-centre reference point.
    CHECK(gm_lambda(pair, obs, cfg) == doctest::Approx(17.0 / 32.0).epsilon(1e-12));

    const OutputConclusion out = gm_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    CHECK(out.fuzzy.core().centre() == doctest::Approx(27.0).epsilon(1e-9));

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    CHECK(gm_lambda(bpair, at_a1, cfg) == doctest::Approx(0.0));
    check_points(gm_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});
}

TEST_CASE("ScaleMove blends characteristic points and rescales the support") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    const auto obs = sets_of(obs1());
    const FlankingPair pair = select_flanking_pair(views, obs, cfg);

    CHECK(scalemove_lambda_rep(pair, obs, cfg.minkowski_w) ==
          doctest::Approx(0.53125).epsilon(1e-12));
    const OutputConclusion out = scalemove_interpolate(pair, obs, cfg);
    CHECK(!out.abnormal);
    CHECK(representative_value(out.fuzzy, ReferencePointKind::CentroidOfCharacteristicPoints) ==
          doctest::Approx(27.0).epsilon(1e-9));

    const std::vector<FuzzySet> at_a1{FuzzySet::triangle(5, 10, 15)};
    const FlankingPair bpair = select_flanking_pair(views, at_a1, cfg);
    CHECK(scalemove_lambda_rep(bpair, at_a1, cfg.minkowski_w) == doctest::Approx(0.0));
    check_points(scalemove_interpolate(bpair, at_a1, cfg).fuzzy, {{5, 0}, {10, 1}, {15, 0}});

    // Five-point polygons are outside the method's shape class.
    std::vector<RuleView> poly_views = views;
    poly_views[0].antecedents[0] = FuzzySet(
        std::vector<Point>{{5, 0}, {7, 0.5}, {10, 1}, {12, 0.5}, {15, 0}});
    const FlankingPair ppair = select_flanking_pair(poly_views, obs, cfg);
    CHECK_THROWS_AS((void)scalemove_interpolate(ppair, obs, cfg), EvaluationError);
}

TEST_CASE("method-specific degenerate inputs raise typed errors") {
    const InterpolationConfig cfg;
    auto code_of = [](auto&& call) {
        try {
            (void)call();
        } catch (const EvaluationError& e) {
            return e.code();
        }
        return EvaluationError::Code::BadConfig;
    };

    // Singleton antecedents: every cut has zero width, zero flanks and zero
    // support, while the observation is genuinely fuzzy.
    const std::vector<RuleView> crisp_views{
        {{FuzzySet::singleton(10)}, FuzzySet::triangle(5, 10, 15), 1.0, 1},
        {{FuzzySet::singleton(42)}, FuzzySet::triangle(37, 42, 47), 1.0, 2}};
    const std::vector<FuzzySet> fuzzy_obs{FuzzySet::triangle(17, 27, 37)};
    const FlankingPair crisp_pair = select_flanking_pair(crisp_views, fuzzy_obs, cfg);

    CHECK(code_of([&] { return vkk_interpolate(crisp_pair, fuzzy_obs, cfg); }) ==
          EvaluationError::Code::WidthRatioUndefined);
    CHECK(code_of([&] { return gm_interpolate(crisp_pair, fuzzy_obs, cfg); }) ==
          EvaluationError::Code::FuzzinessUndefined);
    CHECK(code_of([&] { return scalemove_interpolate(crisp_pair, fuzzy_obs, cfg); }) ==
          EvaluationError::Code::ScaleUndefined);

    // Crisp-edged antecedent flank against a fuzzy observation flank.
    const std::vector<RuleView> crisp_left_views{
        {{FuzzySet(std::vector<Point>{{10, 1}, {15, 0}})}, FuzzySet::triangle(5, 10, 15), 1.0, 1},
        {{FuzzySet::triangle(37, 42, 47)}, FuzzySet::triangle(37, 42, 47), 1.0, 2}};
    const FlankingPair crisp_left = select_flanking_pair(crisp_left_views, fuzzy_obs, cfg);
    CHECK(code_of([&] { return crf_interpolate(crisp_left, fuzzy_obs, cfg); }) ==
          EvaluationError::Code::FuzzinessUndefined);

    // Coincident rule reference points defeat every lambda ratio.
    FlankingPair coincident;
    coincident.lower = {{FuzzySet::triangle(5, 10, 15)}, FuzzySet::triangle(5, 10, 15), 1.0, 1};
    coincident.upper = {{FuzzySet::triangle(5, 10, 15)}, FuzzySet::triangle(37, 42, 47), 1.0, 2};
    coincident.lambdas = {0.0};
    const std::vector<FuzzySet> at_peak{FuzzySet::triangle(8, 10, 12)};
    CHECK(code_of([&] { return maci_interpolate(coincident, at_peak, cfg); }) ==
          EvaluationError::Code::DegenerateRules);
    CHECK(code_of([&] { return gm_interpolate(coincident, at_peak, cfg); }) ==
          EvaluationError::Code::DegenerateRules);
    CHECK(code_of([&] {
              return scalemove_lambda_rep(coincident, at_peak, cfg.minkowski_w);
          }) == EvaluationError::Code::DegenerateRules);
}

TEST_CASE("evaluate dispatches and defuzzifies") {
    InterpolationConfig cfg;
    const auto f1 = fis1();
    const auto o1 = obs1();

    const Conclusion kh = evaluate(f1, o1, cfg);
    REQUIRE(kh.outputs.size() == 1);
    CHECK(std::fabs(kh.outputs[0].crisp - 27.0) <= 1e-6);

    cfg.method = Method::ScaleMove;
    const Conclusion sm = evaluate(f1, o1, cfg);
    CHECK(sm.outputs[0].crisp > 26.0);
    CHECK(sm.outputs[0].crisp < 28.0);

    cfg.method = Method::KH;
    const auto f2 = fis2();
    CHECK_THROWS_AS((void)evaluate(f2, o1, cfg), EvaluationError);
    try {
        (void)evaluate(f2, o1, cfg);
    } catch (const EvaluationError& e) {
        CHECK(e.code() == EvaluationError::Code::DimensionMismatch);
    }

    // KHstab on a dense uniform grid agrees with the breakpoint KH result.
    InterpolationConfig dense;
    dense.method = Method::KHstab;
    dense.alpha_levels = AlphaLevelScheme::user_defined(101);
    const Conclusion stab = evaluate(f1, o1, dense);
    CHECK(std::fabs(stab.outputs[0].crisp - kh.outputs[0].crisp) <= 1e-6);
}

TEST_CASE("evaluate_batch isolates per-row failures") {
    const InterpolationConfig cfg;
    const auto f1 = fis1();
    const auto o1 = obs1();

    const std::vector<ObsDocument> rows{o1, o1};
    const auto results = evaluate_batch(f1, rows, cfg);
    REQUIRE(results.size() == 2);
    REQUIRE(results[0].ok());
    REQUIRE(results[1].ok());
    CHECK(results[0].conclusion->outputs[0].crisp == results[1].conclusion->outputs[0].crisp);

    CHECK(evaluate_batch(f1, {}, cfg).empty());

    ObsDocument bad = o1;
    bad.num_inputs = 2;   // dimensionally inconsistent row
    const std::vector<ObsDocument> mixed{o1, bad};
    const auto partial = evaluate_batch(f1, mixed, cfg);
    REQUIRE(partial.size() == 2);
    CHECK(partial[0].ok());
    CHECK(!partial[1].ok());
    CHECK(!partial[1].error.empty());
}

TEST_CASE("rules with unreferenced inputs are skipped with a diagnostic") {
    FisDocument doc = fis1();
    doc.rules.push_back({{0}, {1}, 1.0, 1});
    doc.num_rules = 3;
    const Conclusion out = evaluate(doc, obs1(), {});
    CHECK(std::fabs(out.outputs[0].crisp - 27.0) <= 1e-6);
    bool noted = false;
    for (const auto& d : out.diagnostics) noted = noted || d.find("skipped") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("property: KH identity on random identical-partition systems") {
    auto rng = make_rng(808);
    const InterpolationConfig cfg;
    for (int trial = 0; trial < 1000; ++trial) {
        const SingleDimSystem sys = random_identity_system(rng);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const FlankingPair pair = select_flanking_pair(views, sys.observation, cfg);
        const OutputConclusion out = kh_interpolate(pair, sys.observation, cfg);
        REQUIRE(!out.abnormal);
        for (const AlphaCut& cut : out.cuts) {
            const AlphaCut expected = sys.observation[0].alpha_cut(cut.level);
            CHECK(std::fabs(cut.lower - expected.lower) <= 1e-9);
            CHECK(std::fabs(cut.upper - expected.upper) <= 1e-9);
        }
    }
}

TEST_CASE("property: KHstab equals KH on random two-rule one-input systems") {
    auto rng = make_rng(909);
    const InterpolationConfig cfg;
    for (int trial = 0; trial < 1000; ++trial) {
        const SingleDimSystem sys = random_congruent_system(rng, 0.3);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const FlankingPair pair = select_flanking_pair(views, sys.observation, cfg);
        const OutputConclusion kh = kh_interpolate(pair, sys.observation, cfg);
        const OutputConclusion stab = khstab_interpolate(views, sys.observation, cfg);
        REQUIRE(kh.cuts.size() == stab.cuts.size());
        for (std::size_t i = 0; i < kh.cuts.size(); ++i) {
            CHECK(std::fabs(kh.cuts[i].lower - stab.cuts[i].lower) <= 1e-9);
            CHECK(std::fabs(kh.cuts[i].upper - stab.cuts[i].upper) <= 1e-9);
        }
    }
}

TEST_CASE("property: boundary consistency for every method") {
    auto rng = make_rng(1010);
    const InterpolationConfig cfg;
    for (int trial = 0; trial < 1000; ++trial) {
        // Congruent partitions; the observation IS one of the antecedents.
        SingleDimSystem sys = random_congruent_system(rng, 0.0);
        const bool use_first = uniform_int(rng, 0, 1) == 0;
        const RuleView& target = use_first ? sys.rule1 : sys.rule2;
        sys.observation = {target.antecedents[0]};
        const std::vector<RuleView> views{sys.rule1, sys.rule2};

        for (Method method : all_methods()) {
            const OutputConclusion out = run_method(method, views, sys.observation, cfg);
            REQUIRE(!out.abnormal);
            const auto& expected = target.consequent.points();
            REQUIRE(out.fuzzy.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(std::fabs(out.fuzzy.points()[i].x - expected[i].x) <= 1e-9);
                CHECK(std::fabs(out.fuzzy.points()[i].mu - expected[i].mu) <= 1e-9);
            }
        }
    }
}

TEST_CASE("property: reference points stay between the flanking consequents") {
    auto rng = make_rng(1111);
    const InterpolationConfig cfg;
    const Method methods[] = {Method::KH, Method::KHstab, Method::VKK, Method::MACI,
                              Method::CRF, Method::ScaleMove};
    for (int trial = 0; trial < 1000; ++trial) {
        const SingleDimSystem sys = random_congruent_system(rng, 0.15);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const double rp1 =
            representative_value(sys.rule1.consequent, ReferencePointKind::CoreCentre);
        const double rp2 =
            representative_value(sys.rule2.consequent, ReferencePointKind::CoreCentre);
        const double lo = std::min(rp1, rp2);
        const double hi = std::max(rp1, rp2);
        for (Method method : methods) {
            const OutputConclusion out = run_method(method, views, sys.observation, cfg);
            if (out.abnormal) continue;
            const double rp = representative_value(out.fuzzy, ReferencePointKind::CoreCentre);
            CHECK(rp >= lo - 1e-9);
            CHECK(rp <= hi + 1e-9);
        }
    }
}

TEST_CASE("property: MACI conclusions stay valid where KH degenerates") {
    auto rng = make_rng(1212);
    const InterpolationConfig cfg;
    int kh_abnormal = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SingleDimSystem sys = random_kh_abnormal_candidate(rng);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const FlankingPair pair = select_flanking_pair(views, sys.observation, cfg);
        if (kh_interpolate(pair, sys.observation, cfg).abnormal) ++kh_abnormal;
        const OutputConclusion maci = maci_interpolate(pair, sys.observation, cfg);
        CHECK(!maci.abnormal);
        CHECK(validate_cnf(maci.fuzzy).valid());
    }
    // The generator must actually produce degenerate linear conclusions for
    // the comparison to mean anything.
    CHECK(kh_abnormal > 100);
}

TEST_CASE("property: ScaleMove preserves the representative value") {
    auto rng = make_rng(1313);
    const InterpolationConfig cfg;
    const auto centroid = ReferencePointKind::CentroidOfCharacteristicPoints;
    for (int trial = 0; trial < 1000; ++trial) {
        // Same-arity shapes: all triangles or all trapezoids.
        const bool traps = uniform_int(rng, 0, 1) == 1;
        const double half = uniform(rng, 2.0, 5.0);
        const double core_half = traps ? uniform(rng, 0.5, 3.0) : 0.0;
        auto shape = [&](double centre) {
            return traps ? FuzzySet::trapezoid(centre - core_half - half, centre - core_half,
                                               centre + core_half, centre + core_half + half)
                         : FuzzySet::triangle(centre - half, centre, centre + half);
        };
        const double p1 = uniform(rng, 10.0, 25.0);
        const double p2 = uniform(rng, 55.0, 85.0);
        const double shift = uniform(rng, -8.0, 8.0);
        const double po = uniform(rng, p1 + half + core_half + 1.0, p2 - half - core_half - 1.0);
        SingleDimSystem sys;
        sys.rule1 = {{shape(p1)}, shape(p1 + shift), 1.0, 1};
        sys.rule2 = {{shape(p2)}, shape(p2 + shift), 1.0, 2};
        sys.observation = {shape(po)};

        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const FlankingPair pair = select_flanking_pair(views, sys.observation, cfg);
        const double lambda = scalemove_lambda_rep(pair, sys.observation, cfg.minkowski_w);
        const OutputConclusion out = scalemove_interpolate(pair, sys.observation, cfg);
        REQUIRE(!out.abnormal);
        const double expected =
            (1.0 - lambda) * representative_value(pair.lower.consequent, centroid) +
            lambda * representative_value(pair.upper.consequent, centroid);
        CHECK(std::fabs(representative_value(out.fuzzy, centroid) - expected) <= 1e-9);
    }
}

TEST_CASE("property: lambda grows as the observation slides from A1 to A2") {
    const InterpolationConfig cfg;
    const auto views = views_for(fis1());
    FlankingPair pair;
    pair.lower = views[0];
    pair.upper = views[1];
    pair.lambdas = {0.0};

    double prev_core = -1.0;
    double prev_rep = -1.0;
    for (int step = 0; step <= 64; ++step) {
        const double peak = 10.0 + (42.0 - 10.0) * step / 64.0;
        const std::vector<FuzzySet> obs{FuzzySet::triangle(peak - 5, peak, peak + 5)};
        const double core = maci_lambda_core(pair, obs, cfg.rp_type);
        const double rep = scalemove_lambda_rep(pair, obs, cfg.minkowski_w);
        CHECK(core >= prev_core - 1e-12);
        CHECK(rep >= prev_rep - 1e-12);
        prev_core = core;
        prev_rep = rep;
    }
    CHECK(prev_core == doctest::Approx(1.0));
    CHECK(prev_rep == doctest::Approx(1.0));
}

TEST_CASE("property: breakpoint conclusions track a dense level sweep") {
    auto rng = make_rng(1414);
    const InterpolationConfig cfg;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const SingleDimSystem sys = random_congruent_system(rng, 0.07);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        const FlankingPair pair = select_flanking_pair(views, sys.observation, cfg);
        const OutputConclusion out = kh_interpolate(pair, sys.observation, cfg);
        REQUIRE(!out.abnormal);

        const auto cuts = oracle_linear_conclusion(
            {as_oracle_tri(sys.rule1.antecedents[0]), as_oracle_tri(sys.rule2.antecedents[0])},
            {as_oracle_tri(sys.rule1.consequent), as_oracle_tri(sys.rule2.consequent)},
            as_oracle_tri(sys.observation[0]), 1001);
        const double lo = std::min(cuts[0].lower, out.fuzzy.points().front().x);
        const double hi = std::max(cuts[0].upper, out.fuzzy.points().back().x);
        for (int g = 0; g <= 512; ++g) {
            const double x = lo + (hi - lo) * g / 512.0;
            worst = std::max(worst,
                             std::fabs(out.fuzzy.membership(x) - oracle_membership(cuts, x)));
        }
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("property: evaluation is deterministic") {
    auto rng = make_rng(1515);
    const InterpolationConfig cfg;
    for (int trial = 0; trial < 1000; ++trial) {
        const SingleDimSystem sys = random_congruent_system(rng, 0.2);
        const std::vector<RuleView> views{sys.rule1, sys.rule2};
        for (Method method : all_methods()) {
            const OutputConclusion a = run_method(method, views, sys.observation, cfg);
            const OutputConclusion b = run_method(method, views, sys.observation, cfg);
            REQUIRE(a.fuzzy.size() == b.fuzzy.size());
            for (std::size_t i = 0; i < a.fuzzy.size(); ++i) {
                CHECK(std::memcmp(&a.fuzzy.points()[i].x, &b.fuzzy.points()[i].x,
                                  sizeof(double)) == 0);
                CHECK(std::memcmp(&a.fuzzy.points()[i].mu, &b.fuzzy.points()[i].mu,
                                  sizeof(double)) == 0);
            }
            const bool both_nan = std::isnan(a.crisp) && std::isnan(b.crisp);
            CHECK((both_nan || std::memcmp(&a.crisp, &b.crisp, sizeof(double)) == 0));
        }
    }
}
