#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "fri/fis_format.hpp"
#include "fri/interpolation.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const fri::FisDocument& fis1() {
    static const fri::FisDocument doc =
        fri::parse_fis(slurp(std::string(FRI_FIXTURE_DIR) + "/fis1.fis"));
    return doc;
}

const fri::ObsDocument& obs1() {
    static const fri::ObsDocument doc =
        fri::parse_obs(slurp(std::string(FRI_FIXTURE_DIR) + "/obs1.obs"));
    return doc;
}

const fri::FisDocument& fis2() {
    static const fri::FisDocument doc =
        fri::parse_fis(slurp(std::string(FRI_FIXTURE_DIR) + "/fis2.fis"));
    return doc;
}

const fri::ObsDocument& obs2() {
    static const fri::ObsDocument doc =
        fri::parse_obs(slurp(std::string(FRI_FIXTURE_DIR) + "/obs2.obs"));
    return doc;
}

void BM_ParseFis(benchmark::State& state) {
    const std::string text = slurp(std::string(FRI_FIXTURE_DIR) + "/fis2.fis");
    for (auto _ : state) {
        auto doc = fri::parse_fis(text);
        benchmark::DoNotOptimize(doc);
    }
}
BENCHMARK(BM_ParseFis);

void BM_EvaluateSingleInput(benchmark::State& state) {
    fri::InterpolationConfig cfg;
    cfg.method = static_cast<fri::Method>(state.range(0));
    for (auto _ : state) {
        auto out = fri::evaluate(fis1(), obs1(), cfg);
        benchmark::DoNotOptimize(out);
    }
    state.SetLabel(fri::method_name(cfg.method));
}
BENCHMARK(BM_EvaluateSingleInput)->DenseRange(0, 7);

void BM_EvaluateTwoInput(benchmark::State& state) {
    fri::InterpolationConfig cfg;
    cfg.method = static_cast<fri::Method>(state.range(0));
    for (auto _ : state) {
        auto out = fri::evaluate(fis2(), obs2(), cfg);
        benchmark::DoNotOptimize(out);
    }
    state.SetLabel(fri::method_name(cfg.method));
}
BENCHMARK(BM_EvaluateTwoInput)->DenseRange(0, 7);

void BM_EvaluateDenseLevels(benchmark::State& state) {
    fri::InterpolationConfig cfg;
    cfg.alpha_levels = fri::AlphaLevelScheme::user_defined(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = fri::evaluate(fis1(), obs1(), cfg);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateDenseLevels)->RangeMultiplier(4)->Range(101, 6464)->Complexity();

void BM_CogDefuzzify(benchmark::State& state) {
    const fri::FuzzySet set = fri::FuzzySet::triangle(17, 27, 37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fri::cog_defuzzify(set, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CogDefuzzify)->Arg(101)->Arg(501)->Arg(5001);

} // namespace

BENCHMARK_MAIN();
