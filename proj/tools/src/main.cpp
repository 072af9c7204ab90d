#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fri_cli/commands.hpp"

namespace {

using fri::cli::kExitUsage;

bool parse_alpha(const std::string& text, fri::AlphaLevelScheme& scheme, std::string& error) {
    if (text == "breakpoints") {
        scheme = fri::AlphaLevelScheme::breakpoints();
        return true;
    }
    if (text == "userdefined") {
        scheme = fri::AlphaLevelScheme::user_defined(101);
        return true;
    }
    if (text.rfind("userdefined:", 0) == 0) {
        try {
            const int n = std::stoi(text.substr(12));
            if (n < 2) {
                error = "--alpha userdefined:<n> needs n >= 2";
                return false;
            }
            scheme = fri::AlphaLevelScheme::user_defined(n);
            return true;
        } catch (const std::exception&) {
            error = "bad level count in '" + text + "'";
            return false;
        }
    }
    error = "--alpha expects 'breakpoints' or 'userdefined:<n>', got '" + text + "'";
    return false;
}

bool parse_rp(const std::string& text, fri::ReferencePointKind& kind, std::string& error) {
    if (text == "corecentre" || text == "corecenter") {
        kind = fri::ReferencePointKind::CoreCentre;
        return true;
    }
    if (text == "centroid") {
        kind = fri::ReferencePointKind::CentroidOfCharacteristicPoints;
        return true;
    }
    error = "--rp expects 'corecentre' or 'centroid', got '" + text + "'";
    return false;
}

struct CommonOptions {
    std::string method = "KH";
    std::vector<std::string> methods;
    std::string alpha;
    std::string rp;
    fri::cli::RunSpec spec;
};

void add_pair_options(CLI::App* cmd, fri::cli::RunSpec& spec) {
    cmd->add_option("--fis", spec.fis_path, "rule-base file")->required();
    cmd->add_option("--obs", spec.obs_path, "observation file")->required();
}

void add_config_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--alpha", opt.alpha, "alpha levels: breakpoints|userdefined:<n>");
    cmd->add_option("--num-points", opt.spec.config.num_points,
                    "sample count for defuzzification and CSV output");
    cmd->add_option("--rp", opt.rp, "reference point: corecentre|centroid");
    cmd->add_option("--w", opt.spec.config.minkowski_w, "Minkowski distance exponent");
    cmd->add_option("--csv", opt.spec.csv_path, "write the conclusion as CSV");
    cmd->add_option("--svg", opt.spec.svg_path, "write partition/conclusion plots as SVG");
    cmd->add_option("--precision", opt.spec.precision, "printed digits after the decimal point")
        ->check(CLI::Range(0, 17));
}

int finish_config(CommonOptions& opt) {
    std::string error;
    if (!opt.alpha.empty() && !parse_alpha(opt.alpha, opt.spec.config.alpha_levels, error)) {
        std::cerr << "error: " << error << '\n';
        return kExitUsage;
    }
    if (!opt.rp.empty() && !parse_rp(opt.rp, opt.spec.config.rp_type, error)) {
        std::cerr << "error: " << error << '\n';
        return kExitUsage;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy rule interpolation for sparse rule bases"};
    app.require_subcommand(1);

    CommonOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one interpolation method");
    add_pair_options(eval, eval_opt.spec);
    eval->add_option("--method", eval_opt.method,
                     "KH|KHstab|VKK|MACI|CRF|IMUL|GM|ScaleMove (default KH)");
    add_config_options(eval, eval_opt);
    eval->add_flag("--quiet", eval_opt.spec.quiet, "print crisp values only");
    eval->add_flag("--verbose", eval_opt.spec.verbose, "print evaluation diagnostics");

    CommonOptions cmp_opt;
    CLI::App* compare = app.add_subcommand("compare", "evaluate several methods side by side");
    add_pair_options(compare, cmp_opt.spec);
    compare->add_option("--method", cmp_opt.methods, "method to include (repeatable)");
    add_config_options(compare, cmp_opt);
    compare->add_flag("--verbose", cmp_opt.spec.verbose, "print evaluation diagnostics");

    std::string val_fis;
    std::string val_obs;
    CLI::App* validate = app.add_subcommand("validate", "check a rule-base/observation pair");
    validate->add_option("--fis", val_fis, "rule-base file")->required();
    validate->add_option("--obs", val_obs, "observation file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (validate->parsed()) return fri::cli::cmd_validate(val_fis, val_obs, std::cout, std::cerr);

    if (eval->parsed()) {
        if (const int rc = finish_config(eval_opt)) return rc;
        const auto method = fri::method_from_name(eval_opt.method);
        if (!method) {
            std::cerr << "error: unknown method '" << eval_opt.method << "'\n";
            return kExitUsage;
        }
        eval_opt.spec.config.method = *method;
        return fri::cli::cmd_eval(eval_opt.spec, std::cout, std::cerr);
    }

    if (const int rc = finish_config(cmp_opt)) return rc;
    std::vector<fri::Method> methods;
    for (const auto& name : cmp_opt.methods) {
        const auto method = fri::method_from_name(name);
        if (!method) {
            std::cerr << "error: unknown method '" << name << "'\n";
            return kExitUsage;
        }
        methods.push_back(*method);
    }
    return fri::cli::cmd_compare(cmp_opt.spec, methods, std::cout, std::cerr);
}
