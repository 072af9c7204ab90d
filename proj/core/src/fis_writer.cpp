#include "fri/fis_format.hpp"

#include <charconv>
#include <sstream>

namespace fri {

namespace {

std::string format_number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_list(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += format_number(values[i]);
    }
    out += ']';
    return out;
}

void write_mf(std::ostream& os, const char* prefix, std::size_t index,
              const MembershipDecl& decl) {
    os << prefix << index + 1 << "='" << decl.label << "':" << mf_kind_name(decl.kind) << ","
       << format_list(decl.params) << '!' << format_list(decl.paramsy) << '\n';
}

void write_variable(std::ostream& os, const char* kind, std::size_t index, std::size_t total,
                    const VariableDecl& var) {
    os << '\n' << '[' << kind;
    if (total > 1) os << index + 1;
    os << "]\n";
    os << "Name='" << var.name << "'\n";
    os << "Range=[" << format_number(var.range_lo) << ' ' << format_number(var.range_hi)
       << "]\n";
    os << "NumMFs=" << var.mfs.size() << '\n';
    for (std::size_t i = 0; i < var.mfs.size(); ++i) write_mf(os, "MF", i, var.mfs[i]);
}

} // namespace

std::string serialize_fis(const FisDocument& doc) {
    std::ostringstream os;
    os << "[System]\n";
    os << "Name='" << doc.name << "'\n";
    os << "Type='" << doc.system_type << "'\n";
    if (!doc.version.empty()) os << "Version=" << doc.version << '\n';
    os << "NumInputs=" << doc.num_inputs << '\n';
    os << "NumOutputs=" << doc.num_outputs << '\n';
    os << "NumRules=" << doc.num_rules << '\n';
    if (doc.and_method) os << "AndMethod='" << *doc.and_method << "'\n";
    if (doc.or_method) os << "OrMethod='" << *doc.or_method << "'\n";
    if (doc.imp_method) os << "ImpMethod='" << *doc.imp_method << "'\n";
    if (doc.agg_method) os << "AggMethod='" << *doc.agg_method << "'\n";
    if (!doc.defuzz_method.empty()) os << "DefuzzMethod='" << doc.defuzz_method << "'\n";

    for (std::size_t i = 0; i < doc.inputs.size(); ++i)
        write_variable(os, "Input", i, doc.inputs.size(), doc.inputs[i]);
    for (std::size_t i = 0; i < doc.outputs.size(); ++i)
        write_variable(os, "Output", i, doc.outputs.size(), doc.outputs[i]);

    os << "\n[Rules]\n";
    for (const Rule& rule : doc.rules) {
        for (std::size_t i = 0; i < rule.antecedents.size(); ++i) {
            if (i) os << ' ';
            os << rule.antecedents[i];
        }
        os << ", ";
        for (std::size_t i = 0; i < rule.consequents.size(); ++i) {
            if (i) os << ' ';
            os << rule.consequents[i];
        }
        os << " (" << format_number(rule.weight) << ") : " << rule.connective << '\n';
    }
    return os.str();
}

std::string serialize_obs(const ObsDocument& doc) {
    std::ostringstream os;
    os << "NumInputs=" << doc.num_inputs << '\n';
    os << "ObsName='" << doc.name << "'\n";
    os << "[Observation]\n";
    for (std::size_t i = 0; i < doc.observations.size(); ++i)
        write_mf(os, "OBS", i, doc.observations[i]);
    return os.str();
}

} // namespace fri
