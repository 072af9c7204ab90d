#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fri/fuzzy_set.hpp"

namespace fri {

enum class MfKind { Singleton, Triangle, Trapezoid, Polygon };

const char* mf_kind_name(MfKind kind);                    // "singlmf", "trimf", ...
std::optional<MfKind> mf_kind_from_name(const std::string& name);

/// One membership-function declaration: characteristic abscissae (`params`)
/// plus the membership value at each of them (`paramsy`).
struct MembershipDecl {
    std::string label;
    MfKind kind = MfKind::Triangle;
    std::vector<double> params;
    std::vector<double> paramsy;
    bool operator==(const MembershipDecl&) const = default;
};

struct VariableDecl {
    std::string name;
    double range_lo = 0.0;
    double range_hi = 0.0;
    std::vector<MembershipDecl> mfs;
    bool operator==(const VariableDecl&) const = default;
};

/// Rule indices are 1-based into the variable's membership list; 0 means
/// "this variable is not referenced by the rule".
struct Rule {
    std::vector<int> antecedents;   // one per input
    std::vector<int> consequents;   // one per output
    double weight = 1.0;
    int connective = 1;
    bool operator==(const Rule&) const = default;
};

struct FisDocument {
    std::string name;
    std::string system_type;        // expected "sparse"
    std::string version;
    int num_inputs = 0;
    int num_outputs = 0;
    int num_rules = 0;
    std::optional<std::string> and_method;
    std::optional<std::string> or_method;
    std::optional<std::string> imp_method;
    std::optional<std::string> agg_method;
    std::string defuzz_method;
    std::vector<VariableDecl> inputs;
    std::vector<VariableDecl> outputs;
    std::vector<Rule> rules;
    bool operator==(const FisDocument&) const = default;
};

struct ObsDocument {
    int num_inputs = 0;
    std::string name;
    std::vector<MembershipDecl> observations;   // one per input dimension
    bool operator==(const ObsDocument&) const = default;
};

class ParseError : public std::runtime_error {
public:
    enum class Code {
        MalformedLine,
        UnknownSection,
        UnknownKind,
        ArityMismatch,
        CountMismatch,
        RangeViolation,
        NotCnf,
        BadNumber,
        BadRule,
        DuplicateDefinition,
        MissingField,
        DuplicatePoint,
    };

    ParseError(Code code, int line, const std::string& message);
    Code code() const { return code_; }
    int line() const { return line_; }   // 1-based; 0 when not tied to a line

private:
    Code code_;
    int line_;
};

/// Parse the `[System]`/`[Input...]`/`[Output...]`/`[Rules]` text format.
/// Whitespace-insensitive between tokens; `%` starts a comment; paramsy is
/// accepted as `![...]`, `([...])` or a bare `[...]` after the params list,
/// and defaulted by kind when absent. Throws ParseError on the first
/// violation, with its line number.
FisDocument parse_fis(const std::string& text);

/// Parse the observation format: `NumInputs=`, `ObsName=`, `[Observation]`
/// and one `OBS<k>=` declaration per input dimension.
ObsDocument parse_obs(const std::string& text);

/// Canonical text form (sections in System/Input/Output/Rules order, `!`
/// paramsy separator, shortest round-trip number formatting). Satisfies
/// parse(serialize(doc)) == doc field for field.
std::string serialize_fis(const FisDocument& doc);
std::string serialize_obs(const ObsDocument& doc);

/// Zip params with paramsy into a fuzzy set. Duplicate abscissae with equal
/// membership are merged; conflicting membership raises std::domain_error.
FuzzySet to_fuzzy_set(const MembershipDecl& decl);

} // namespace fri
