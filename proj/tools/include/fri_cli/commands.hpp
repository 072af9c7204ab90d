#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fri/interpolation.hpp"
#include "fri_cli/exit_codes.hpp"

namespace fri::cli {

struct RunSpec {
    std::string fis_path;
    std::string obs_path;
    InterpolationConfig config;
    std::string csv_path;   // empty: no CSV
    std::string svg_path;   // empty: no SVG
    int precision = 6;
    bool quiet = false;
    bool verbose = false;
};

/// Parse both files, print per-line diagnostics; exit 0 iff both are valid
/// and dimensionally consistent.
int cmd_validate(const std::string& fis_path, const std::string& obs_path, std::ostream& out,
                 std::ostream& err);

/// Evaluate one method; print one line per output (crisp value and
/// abnormality status), optionally emit CSV and SVG files.
int cmd_eval(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Evaluate several methods side by side; print a table, optionally emit a
/// combined SVG and per-method CSV files. Per-method failures appear in the
/// table without aborting the others.
int cmd_compare(const RunSpec& spec, const std::vector<Method>& methods, std::ostream& out,
                std::ostream& err);

} // namespace fri::cli
