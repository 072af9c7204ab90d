#include "fri_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>

#include "fri_cli/csv.hpp"
#include "fri_cli/svg.hpp"

namespace fri::cli {

namespace {

constexpr const char* kPartitionColour = "#9aa0a6";
constexpr const char* kObservationColour = "#d93025";
const char* const kPalette[] = {"#1a73e8", "#188038", "#f9ab00", "#d93025",
                                "#9334e6", "#12b5cb", "#e8710a", "#7b1fa2"};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedPair {
    FisDocument fis;
    ObsDocument obs;
};

// Returns the pair or prints a diagnostic and stores the exit code.
std::optional<LoadedPair> load_pair(const std::string& fis_path, const std::string& obs_path,
                                    std::ostream& err, int& exit_code) {
    const auto fis_text = read_file(fis_path);
    if (!fis_text) {
        err << fis_path << ": cannot read file\n";
        exit_code = kExitIo;
        return std::nullopt;
    }
    const auto obs_text = read_file(obs_path);
    if (!obs_text) {
        err << obs_path << ": cannot read file\n";
        exit_code = kExitIo;
        return std::nullopt;
    }
    LoadedPair pair;
    try {
        pair.fis = parse_fis(*fis_text);
    } catch (const ParseError& e) {
        err << fis_path << ':' << e.line() << ": error: " << e.what() << '\n';
        exit_code = kExitParse;
        return std::nullopt;
    }
    try {
        pair.obs = parse_obs(*obs_text);
    } catch (const ParseError& e) {
        err << obs_path << ':' << e.line() << ": error: " << e.what() << '\n';
        exit_code = kExitParse;
        return std::nullopt;
    }
    return pair;
}

std::string format_crisp(double v, int precision) {
    if (std::isnan(v)) return "nan";
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

int map_eval_error(const EvaluationError& e) {
    return e.code() == EvaluationError::Code::DimensionMismatch ? kExitDimension : kExitMethod;
}

std::vector<FuzzySet> observation_sets(const ObsDocument& obs) {
    std::vector<FuzzySet> sets;
    sets.reserve(obs.observations.size());
    for (const auto& decl : obs.observations) sets.push_back(to_fuzzy_set(decl));
    return sets;
}

PlotPanel variable_panel(const VariableDecl& var) {
    PlotPanel panel;
    std::ostringstream title;
    title << var.name << "  [" << var.range_lo << ", " << var.range_hi << "]";
    panel.title = title.str();
    panel.lo = var.range_lo;
    panel.hi = var.range_hi;
    for (const auto& mf : var.mfs) panel.series.push_back({to_fuzzy_set(mf), kPartitionColour, 1.0});
    return panel;
}

PlotSpec eval_plot(const FisDocument& fis, const ObsDocument& obs, const Conclusion& conclusion) {
    PlotSpec spec;
    const std::vector<FuzzySet> obs_sets = observation_sets(obs);
    for (std::size_t d = 0; d < fis.inputs.size(); ++d) {
        PlotPanel panel = variable_panel(fis.inputs[d]);
        panel.series.push_back({obs_sets[d], kObservationColour, 2.0});
        spec.panels.push_back(std::move(panel));
    }
    for (std::size_t o = 0; o < fis.outputs.size(); ++o) {
        PlotPanel panel = variable_panel(fis.outputs[o]);
        panel.series.push_back({conclusion.outputs[o].fuzzy, kPalette[0], 2.0});
        spec.panels.push_back(std::move(panel));
    }
    return spec;
}

int write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err << path << ": cannot write file\n";
        return kExitIo;
    }
    out << content;
    return kExitOk;
}

// "conclusion.csv" + "KH" -> "conclusion.KH.csv"
std::string insert_tag(const std::string& path, const std::string& tag) {
    const std::size_t dot = path.find_last_of('.');
    const std::size_t slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

int emit_csv(const std::string& path, const Conclusion& conclusion, int num_points,
             std::ostream& err) {
    for (std::size_t o = 0; o < conclusion.outputs.size(); ++o) {
        const std::string target =
            conclusion.outputs.size() > 1 ? insert_tag(path, "out" + std::to_string(o + 1))
                                          : path;
        std::ostringstream os;
        write_conclusion_csv(os, conclusion.outputs[o], num_points);
        if (const int rc = write_file(target, os.str(), err); rc != kExitOk) return rc;
    }
    return kExitOk;
}

} // namespace

int cmd_validate(const std::string& fis_path, const std::string& obs_path, std::ostream& out,
                 std::ostream& err) {
    int exit_code = kExitOk;
    const auto pair = load_pair(fis_path, obs_path, err, exit_code);
    if (!pair) return exit_code;
    if (pair->obs.num_inputs != pair->fis.num_inputs) {
        err << "dimension mismatch: observation has " << pair->obs.num_inputs
            << " inputs, rule base declares " << pair->fis.num_inputs << '\n';
        return kExitDimension;
    }
    out << fis_path << ": ok (" << pair->fis.num_inputs << " inputs, " << pair->fis.num_outputs
        << " outputs, " << pair->fis.num_rules << " rules)\n";
    out << obs_path << ": ok (" << pair->obs.num_inputs << " observations)\n";
    return kExitOk;
}

int cmd_eval(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    int exit_code = kExitOk;
    const auto pair = load_pair(spec.fis_path, spec.obs_path, err, exit_code);
    if (!pair) return exit_code;

    Conclusion conclusion;
    try {
        conclusion = evaluate(pair->fis, pair->obs, spec.config);
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return map_eval_error(e);
    }

    for (std::size_t o = 0; o < conclusion.outputs.size(); ++o) {
        const OutputConclusion& oc = conclusion.outputs[o];
        if (spec.quiet) {
            out << format_crisp(oc.crisp, spec.precision) << '\n';
        } else {
            out << pair->fis.outputs[o].name << ' ' << format_crisp(oc.crisp, spec.precision)
                << ' ' << (oc.abnormal ? "ABNORMAL" : "ok") << '\n';
        }
    }
    if (spec.verbose)
        for (const auto& note : conclusion.diagnostics) out << "# " << note << '\n';

    if (!spec.csv_path.empty())
        if (const int rc = emit_csv(spec.csv_path, conclusion, spec.config.num_points, err);
            rc != kExitOk)
            return rc;
    if (!spec.svg_path.empty()) {
        std::ostringstream os;
        write_svg(os, eval_plot(pair->fis, pair->obs, conclusion));
        if (const int rc = write_file(spec.svg_path, os.str(), err); rc != kExitOk) return rc;
    }
    return kExitOk;
}

int cmd_compare(const RunSpec& spec, const std::vector<Method>& methods, std::ostream& out,
                std::ostream& err) {
    if (methods.empty()) {
        err << "compare needs at least one --method\n";
        return kExitUsage;
    }
    int exit_code = kExitOk;
    const auto pair = load_pair(spec.fis_path, spec.obs_path, err, exit_code);
    if (!pair) return exit_code;

    PlotSpec plot;
    for (const auto& output : pair->fis.outputs) plot.panels.push_back(variable_panel(output));

    out << std::left << std::setw(11) << "method" << std::setw(14) << "crisp" << "status\n";
    for (std::size_t m = 0; m < methods.size(); ++m) {
        InterpolationConfig cfg = spec.config;
        cfg.method = methods[m];
        const char* name = method_name(methods[m]);
        try {
            const Conclusion conclusion = evaluate(pair->fis, pair->obs, cfg);
            std::string crisp;
            std::string status;
            for (std::size_t o = 0; o < conclusion.outputs.size(); ++o) {
                if (o) {
                    crisp += ' ';
                    status += ' ';
                }
                crisp += format_crisp(conclusion.outputs[o].crisp, spec.precision);
                status += conclusion.outputs[o].abnormal ? "ABNORMAL" : "ok";
            }
            out << std::left << std::setw(11) << name << std::setw(14) << crisp << status
                << '\n';
            if (spec.verbose)
                for (const auto& note : conclusion.diagnostics)
                    out << "# " << name << ": " << note << '\n';
            for (std::size_t o = 0; o < conclusion.outputs.size(); ++o) {
                FuzzySet overlay = conclusion.outputs[o].fuzzy;
                overlay.set_label(name);
                plot.panels[o].series.push_back(
                    {std::move(overlay), kPalette[m % std::size(kPalette)], 2.0});
            }
            if (!spec.csv_path.empty()) {
                const int rc = emit_csv(insert_tag(spec.csv_path, name), conclusion,
                                        cfg.num_points, err);
                if (rc != kExitOk) return rc;
            }
        } catch (const EvaluationError& e) {
            out << std::left << std::setw(11) << name << std::setw(14) << "-"
                << "error: " << e.what() << '\n';
            exit_code = map_eval_error(e);
        }
    }

    if (!spec.svg_path.empty()) {
        std::ostringstream os;
        write_svg(os, plot);
        if (const int rc = write_file(spec.svg_path, os.str(), err); rc != kExitOk) return rc;
    }
    return exit_code;
}

} // namespace fri::cli
