#include "fri/fis_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace fri {

namespace {

constexpr double kRangeTol = 1e-9;

struct Line {
    int number = 0;
    std::string text;
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Comments run from '%' to end of line, except inside a quoted string.
std::string strip_comment(const std::string& s) {
    char quote = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '%') {
            return s.substr(0, i);
        }
    }
    return s;
}

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        ++number;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        std::string cleaned = trim(strip_comment(raw));
        if (!cleaned.empty()) lines.push_back({number, std::move(cleaned)});
        if (nl == std::string::npos) break;
    }
    return lines;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<double> parse_double(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [p, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || p != last) return std::nullopt;
    return value;
}

std::optional<int> parse_int(const std::string& tok) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || p != last) return std::nullopt;
    return value;
}

// Cursor over a single line for the MF and rule grammars.
struct Cursor {
    std::string s;
    std::size_t i = 0;
    int line;

    explicit Cursor(std::string str, int line_number) : s(std::move(str)), line(line_number) {}

    void skip_ws() {
        while (i < s.size() && is_space(s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(ParseError::Code::MalformedLine, line,
                             std::string("expected '") + c + "' " + what);
    }
    std::string quoted() {
        skip_ws();
        if (i >= s.size() || (s[i] != '\'' && s[i] != '"'))
            throw ParseError(ParseError::Code::MalformedLine, line, "expected quoted string");
        const char q = s[i++];
        const std::size_t start = i;
        while (i < s.size() && s[i] != q) ++i;
        if (i >= s.size())
            throw ParseError(ParseError::Code::MalformedLine, line, "unterminated quoted string");
        std::string out = s.substr(start, i - start);
        ++i;
        return out;
    }
    std::string until(char stop) {
        skip_ws();
        const std::size_t start = i;
        while (i < s.size() && s[i] != stop) ++i;
        return trim(s.substr(start, i - start));
    }
    std::vector<double> bracket_list() {
        expect('[', "before number list");
        std::vector<double> values;
        std::string tok;
        while (true) {
            if (i >= s.size())
                throw ParseError(ParseError::Code::MalformedLine, line, "unterminated '['");
            const char c = s[i];
            if (c == ']' || is_space(c) || c == ',') {
                if (!tok.empty()) {
                    const auto v = parse_double(tok);
                    if (!v)
                        throw ParseError(ParseError::Code::BadNumber, line,
                                         "bad number '" + tok + "'");
                    values.push_back(*v);
                    tok.clear();
                }
                ++i;
                if (c == ']') break;
            } else {
                tok.push_back(c);
                ++i;
            }
        }
        return values;
    }
};

struct KeyValue {
    std::string key;
    std::string value;   // raw, trimmed, still quoted if it was quoted
};

std::optional<KeyValue> split_key_value(const std::string& s) {
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) return std::nullopt;
    KeyValue kv;
    kv.key = trim(s.substr(0, eq));
    kv.value = trim(s.substr(eq + 1));
    if (kv.key.empty()) return std::nullopt;
    return kv;
}

std::string unquote(const std::string& v, int line) {
    if (v.size() >= 2 && (v.front() == '\'' || v.front() == '"')) {
        if (v.back() != v.front())
            throw ParseError(ParseError::Code::MalformedLine, line, "unterminated quoted value");
        return v.substr(1, v.size() - 2);
    }
    return v;
}

int required_int(const KeyValue& kv, int line) {
    const auto v = parse_int(unquote(kv.value, line));
    if (!v)
        throw ParseError(ParseError::Code::BadNumber, line,
                         kv.key + " expects an integer, got '" + kv.value + "'");
    return *v;
}

// `'<label>':<kind>,[x...]` optionally followed by `![y...]`, `([y...])`
// or a bare `[y...]`.
MembershipDecl parse_mf_value(const std::string& value, int line) {
    Cursor cur(value, line);
    MembershipDecl decl;
    decl.label = cur.quoted();
    cur.expect(':', "after membership label");

    std::string kind_tok = cur.until(',');
    cur.expect(',', "after membership kind");
    kind_tok = unquote(kind_tok, line);
    const auto kind = mf_kind_from_name(lower(kind_tok));
    if (!kind)
        throw ParseError(ParseError::Code::UnknownKind, line,
                         "unknown membership kind '" + kind_tok + "'");
    decl.kind = *kind;
    decl.params = cur.bracket_list();

    const char next = cur.peek();
    if (next == '!') {
        cur.accept('!');
        decl.paramsy = cur.bracket_list();
    } else if (next == '(') {
        cur.accept('(');
        decl.paramsy = cur.bracket_list();
        cur.expect(')', "after membership values");
    } else if (next == '[') {
        decl.paramsy = cur.bracket_list();
    } else if (next != '\0') {
        throw ParseError(ParseError::Code::MalformedLine, line,
                         "unexpected trailing text after params");
    }
    if (!cur.done())
        throw ParseError(ParseError::Code::MalformedLine, line,
                         "unexpected trailing text in membership declaration");

    if (decl.paramsy.empty()) {
        switch (decl.kind) {
        case MfKind::Singleton: decl.paramsy = {1.0}; break;
        case MfKind::Triangle: decl.paramsy = {0.0, 1.0, 0.0}; break;
        case MfKind::Trapezoid: decl.paramsy = {0.0, 1.0, 1.0, 0.0}; break;
        case MfKind::Polygon:
            throw ParseError(ParseError::Code::MissingField, line,
                             "polymf requires explicit membership values");
        }
    }
    return decl;
}

Rule parse_rule_line(const std::string& text, int line) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError(ParseError::Code::MalformedLine, line,
                         "rule line needs a ',' between antecedents and consequents");
    Rule rule;
    {
        Cursor cur(text.substr(0, comma), line);
        while (!cur.done()) {
            std::string tok;
            cur.skip_ws();
            while (cur.i < cur.s.size() && !is_space(cur.s[cur.i])) tok.push_back(cur.s[cur.i++]);
            const auto v = parse_int(tok);
            if (!v)
                throw ParseError(ParseError::Code::BadNumber, line,
                                 "bad antecedent index '" + tok + "'");
            rule.antecedents.push_back(*v);
        }
        if (rule.antecedents.empty())
            throw ParseError(ParseError::Code::MalformedLine, line, "rule has no antecedents");
    }

    const std::string rest = text.substr(comma + 1);
    Cursor cur(rest, line);
    while (cur.peek() != '(' && !cur.done()) {
        std::string tok;
        cur.skip_ws();
        while (cur.i < cur.s.size() && !is_space(cur.s[cur.i]) && cur.s[cur.i] != '(')
            tok.push_back(cur.s[cur.i++]);
        const auto v = parse_int(tok);
        if (!v)
            throw ParseError(ParseError::Code::BadNumber, line,
                             "bad consequent index '" + tok + "'");
        rule.consequents.push_back(*v);
    }
    if (rule.consequents.empty())
        throw ParseError(ParseError::Code::MalformedLine, line, "rule has no consequents");
    cur.expect('(', "before rule weight");
    {
        const std::string tok = cur.until(')');
        const auto w = parse_double(tok);
        if (!w)
            throw ParseError(ParseError::Code::BadNumber, line, "bad rule weight '" + tok + "'");
        rule.weight = *w;
    }
    cur.expect(')', "after rule weight");
    cur.expect(':', "before rule connective");
    {
        std::string tok;
        cur.skip_ws();
        while (cur.i < cur.s.size() && !is_space(cur.s[cur.i])) tok.push_back(cur.s[cur.i++]);
        const auto c = parse_int(tok);
        if (!c)
            throw ParseError(ParseError::Code::BadNumber, line, "bad connective '" + tok + "'");
        rule.connective = *c;
    }
    if (!cur.done())
        throw ParseError(ParseError::Code::MalformedLine, line, "trailing text after rule");
    return rule;
}

struct PendingVariable {
    VariableDecl decl;
    std::optional<int> declared_mfs;
    std::vector<std::optional<MembershipDecl>> slots;
    std::vector<int> slot_lines;
    int line = 0;
    bool has_range = false;
};

struct SectionRef {
    enum class Kind { None, System, Input, Output, Rules, Observation } kind = Kind::None;
    std::size_t index = 0;   // for Input/Output
};

void assign_mf_slot(PendingVariable& var, int slot, MembershipDecl decl, int line) {
    if (slot < 1)
        throw ParseError(ParseError::Code::MalformedLine, line, "membership index must be >= 1");
    const auto idx = static_cast<std::size_t>(slot - 1);
    if (var.slots.size() <= idx) {
        var.slots.resize(idx + 1);
        var.slot_lines.resize(idx + 1, 0);
    }
    if (var.slots[idx])
        throw ParseError(ParseError::Code::DuplicateDefinition, line,
                         "MF" + std::to_string(slot) + " defined twice");
    var.slots[idx] = std::move(decl);
    var.slot_lines[idx] = line;
}

void check_kind_arity(const MembershipDecl& decl, int line) {
    const std::size_t n = decl.params.size();
    bool ok = true;
    switch (decl.kind) {
    case MfKind::Singleton: ok = n == 1; break;
    case MfKind::Triangle: ok = n == 3; break;
    case MfKind::Trapezoid: ok = n == 4; break;
    case MfKind::Polygon: ok = n >= 2; break;
    }
    if (!ok)
        throw ParseError(ParseError::Code::ArityMismatch, line,
                         std::string(mf_kind_name(decl.kind)) + " expects " +
                             (decl.kind == MfKind::Polygon ? std::string(">= 2")
                                                           : std::to_string(decl.kind == MfKind::Singleton ? 1
                                                                            : decl.kind == MfKind::Triangle ? 3
                                                                                                            : 4)) +
                             " points, got " + std::to_string(n));
    if (decl.params.size() != decl.paramsy.size())
        throw ParseError(ParseError::Code::ArityMismatch, line,
                         "params and paramsy lengths differ (" + std::to_string(decl.params.size()) +
                             " vs " + std::to_string(decl.paramsy.size()) + ")");
}

void check_cnf(const MembershipDecl& decl, int line) {
    FuzzySet set;
    try {
        set = to_fuzzy_set(decl);
    } catch (const std::domain_error& e) {
        throw ParseError(ParseError::Code::DuplicatePoint, line, e.what());
    }
    const CnfReport report = validate_cnf(set);
    if (!report.valid())
        throw ParseError(ParseError::Code::NotCnf, line,
                         "'" + decl.label + "' is not a convex normal set: " +
                             report.issues.front().message);
}

VariableDecl finalize_variable(PendingVariable& var, const char* what) {
    if (!var.has_range)
        throw ParseError(ParseError::Code::MissingField, var.line,
                         std::string(what) + " '" + var.decl.name + "' has no Range");
    if (var.decl.range_lo >= var.decl.range_hi)
        throw ParseError(ParseError::Code::RangeViolation, var.line,
                         "range of '" + var.decl.name + "' is empty or inverted");
    for (std::size_t i = 0; i < var.slots.size(); ++i) {
        if (!var.slots[i])
            throw ParseError(ParseError::Code::CountMismatch, var.line,
                             "MF" + std::to_string(i + 1) + " of '" + var.decl.name +
                                 "' is missing");
        const int line = var.slot_lines[i];
        check_kind_arity(*var.slots[i], line);
        for (double x : var.slots[i]->params)
            if (x < var.decl.range_lo - kRangeTol || x > var.decl.range_hi + kRangeTol)
                throw ParseError(ParseError::Code::RangeViolation, line,
                                 "'" + var.slots[i]->label + "' has a point outside the range");
        check_cnf(*var.slots[i], line);
        var.decl.mfs.push_back(std::move(*var.slots[i]));
    }
    if (var.declared_mfs && *var.declared_mfs != static_cast<int>(var.decl.mfs.size()))
        throw ParseError(ParseError::Code::CountMismatch, var.line,
                         "'" + var.decl.name + "' declares NumMFs=" +
                             std::to_string(*var.declared_mfs) + " but defines " +
                             std::to_string(var.decl.mfs.size()));
    return std::move(var.decl);
}

// "[Input]" -> implicit next slot; "[Input3]" -> explicit slot 3.
std::optional<std::size_t> section_slot(const std::string& name, const std::string& prefix,
                                        std::size_t implicit_next, int line) {
    if (name.size() < prefix.size()) return std::nullopt;
    if (lower(name.substr(0, prefix.size())) != prefix) return std::nullopt;
    const std::string suffix = name.substr(prefix.size());
    if (suffix.empty()) return implicit_next;
    const auto idx = parse_int(suffix);
    if (!idx || *idx < 1)
        throw ParseError(ParseError::Code::UnknownSection, line,
                         "bad section index in [" + name + "]");
    return static_cast<std::size_t>(*idx - 1);
}

} // namespace

const char* mf_kind_name(MfKind kind) {
    switch (kind) {
    case MfKind::Singleton: return "singlmf";
    case MfKind::Triangle: return "trimf";
    case MfKind::Trapezoid: return "trapmf";
    case MfKind::Polygon: return "polymf";
    }
    return "?";
}

std::optional<MfKind> mf_kind_from_name(const std::string& name) {
    if (name == "singlmf") return MfKind::Singleton;
    if (name == "trimf") return MfKind::Triangle;
    if (name == "trapmf") return MfKind::Trapezoid;
    if (name == "polymf") return MfKind::Polygon;
    return std::nullopt;
}

ParseError::ParseError(Code code, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      code_(code),
      line_(line) {}

FuzzySet to_fuzzy_set(const MembershipDecl& decl) {
    if (decl.params.size() != decl.paramsy.size())
        throw std::domain_error("params and paramsy lengths differ");
    std::vector<Point> pts;
    pts.reserve(decl.params.size());
    for (std::size_t i = 0; i < decl.params.size(); ++i) {
        const Point p{decl.params[i], decl.paramsy[i]};
        if (!pts.empty() && std::fabs(pts.back().x - p.x) <= kInvariantTol) {
            if (std::fabs(pts.back().mu - p.mu) > kInvariantTol)
                throw std::domain_error("duplicate abscissa " + std::to_string(p.x) +
                                        " with conflicting membership");
            continue;
        }
        pts.push_back(p);
    }
    return FuzzySet(std::move(pts), decl.label);
}

FisDocument parse_fis(const std::string& text) {
    FisDocument doc;
    std::vector<PendingVariable> inputs;
    std::vector<PendingVariable> outputs;
    std::vector<Rule> rules;

    SectionRef section;
    bool seen_system = false;

    auto open_variable = [](std::vector<PendingVariable>& vars, std::size_t slot, int line) {
        if (vars.size() <= slot) vars.resize(slot + 1);
        if (vars[slot].line != 0)
            throw ParseError(ParseError::Code::DuplicateDefinition, line,
                             "variable section defined twice");
        vars[slot].line = line;
    };

    for (const Line& ln : significant_lines(text)) {
        if (ln.text.front() == '[') {
            const std::size_t close = ln.text.find(']');
            if (close == std::string::npos)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "unterminated section header");
            if (!trim(ln.text.substr(close + 1)).empty())
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "unexpected text after section header");
            const std::string name = trim(ln.text.substr(1, close - 1));
            const std::string lname = lower(name);
            if (lname == "system") {
                section = {SectionRef::Kind::System, 0};
                seen_system = true;
            } else if (lname == "rules") {
                section = {SectionRef::Kind::Rules, 0};
            } else if (auto slot = section_slot(name, "input", inputs.size(), ln.number)) {
                open_variable(inputs, *slot, ln.number);
                section = {SectionRef::Kind::Input, *slot};
            } else if (auto slot2 = section_slot(name, "output", outputs.size(), ln.number)) {
                open_variable(outputs, *slot2, ln.number);
                section = {SectionRef::Kind::Output, *slot2};
            } else {
                throw ParseError(ParseError::Code::UnknownSection, ln.number,
                                 "unknown section [" + name + "]");
            }
            continue;
        }

        switch (section.kind) {
        case SectionRef::Kind::None:
            throw ParseError(ParseError::Code::MalformedLine, ln.number,
                             "content before the first section header");
        case SectionRef::Kind::System: {
            const auto kv = split_key_value(ln.text);
            if (!kv)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "expected Key=Value in [System]");
            const std::string key = lower(kv->key);
            if (key == "name") doc.name = unquote(kv->value, ln.number);
            else if (key == "type") doc.system_type = unquote(kv->value, ln.number);
            else if (key == "version") doc.version = unquote(kv->value, ln.number);
            else if (key == "numinputs") doc.num_inputs = required_int(*kv, ln.number);
            else if (key == "numoutputs") doc.num_outputs = required_int(*kv, ln.number);
            else if (key == "numrules") doc.num_rules = required_int(*kv, ln.number);
            else if (key == "andmethod") doc.and_method = unquote(kv->value, ln.number);
            else if (key == "ormethod") doc.or_method = unquote(kv->value, ln.number);
            else if (key == "impmethod") doc.imp_method = unquote(kv->value, ln.number);
            else if (key == "aggmethod") doc.agg_method = unquote(kv->value, ln.number);
            else if (key == "defuzzmethod") doc.defuzz_method = unquote(kv->value, ln.number);
            // Unknown [System] keys are tolerated for compatibility with
            // files written by other tools.
            break;
        }
        case SectionRef::Kind::Input:
        case SectionRef::Kind::Output: {
            auto& vars = section.kind == SectionRef::Kind::Input ? inputs : outputs;
            PendingVariable& var = vars[section.index];
            const auto kv = split_key_value(ln.text);
            if (!kv)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "expected Key=Value in a variable section");
            const std::string key = lower(kv->key);
            if (key == "name") {
                var.decl.name = unquote(kv->value, ln.number);
            } else if (key == "range") {
                Cursor cur(kv->value, ln.number);
                const auto bounds = cur.bracket_list();
                if (bounds.size() != 2 || !cur.done())
                    throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                     "Range expects [lo hi]");
                var.decl.range_lo = bounds[0];
                var.decl.range_hi = bounds[1];
                var.has_range = true;
            } else if (key == "nummfs") {
                var.declared_mfs = required_int(*kv, ln.number);
            } else if (key.size() > 2 && key.substr(0, 2) == "mf") {
                const auto slot = parse_int(key.substr(2));
                if (!slot)
                    throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                     "bad membership key '" + kv->key + "'");
                assign_mf_slot(var, *slot, parse_mf_value(kv->value, ln.number), ln.number);
            }
            break;
        }
        case SectionRef::Kind::Rules:
            rules.push_back(parse_rule_line(ln.text, ln.number));
            break;
        case SectionRef::Kind::Observation:
            break;   // unreachable in parse_fis
        }
    }

    if (!seen_system)
        throw ParseError(ParseError::Code::MissingField, 0, "missing [System] section");

    for (auto& var : inputs) doc.inputs.push_back(finalize_variable(var, "input"));
    for (auto& var : outputs) doc.outputs.push_back(finalize_variable(var, "output"));
    doc.rules = std::move(rules);

    if (doc.num_inputs != static_cast<int>(doc.inputs.size()))
        throw ParseError(ParseError::Code::CountMismatch, 0,
                         "NumInputs=" + std::to_string(doc.num_inputs) + " but " +
                             std::to_string(doc.inputs.size()) + " input sections found");
    if (doc.num_outputs != static_cast<int>(doc.outputs.size()))
        throw ParseError(ParseError::Code::CountMismatch, 0,
                         "NumOutputs=" + std::to_string(doc.num_outputs) + " but " +
                             std::to_string(doc.outputs.size()) + " output sections found");
    if (doc.num_rules != static_cast<int>(doc.rules.size()))
        throw ParseError(ParseError::Code::CountMismatch, 0,
                         "NumRules=" + std::to_string(doc.num_rules) + " but " +
                             std::to_string(doc.rules.size()) + " rules found");

    for (std::size_t r = 0; r < doc.rules.size(); ++r) {
        const Rule& rule = doc.rules[r];
        const std::string where = "rule " + std::to_string(r + 1);
        if (rule.antecedents.size() != doc.inputs.size())
            throw ParseError(ParseError::Code::BadRule, 0,
                             where + " has " + std::to_string(rule.antecedents.size()) +
                                 " antecedents for " + std::to_string(doc.inputs.size()) +
                                 " inputs");
        if (rule.consequents.size() != doc.outputs.size())
            throw ParseError(ParseError::Code::BadRule, 0,
                             where + " has " + std::to_string(rule.consequents.size()) +
                                 " consequents for " + std::to_string(doc.outputs.size()) +
                                 " outputs");
        for (std::size_t d = 0; d < rule.antecedents.size(); ++d) {
            const int idx = rule.antecedents[d];
            if (idx < 0 || idx > static_cast<int>(doc.inputs[d].mfs.size()))
                throw ParseError(ParseError::Code::BadRule, 0,
                                 where + ": antecedent index " + std::to_string(idx) +
                                     " out of range for input " + std::to_string(d + 1));
        }
        for (std::size_t d = 0; d < rule.consequents.size(); ++d) {
            const int idx = rule.consequents[d];
            if (idx < 0 || idx > static_cast<int>(doc.outputs[d].mfs.size()))
                throw ParseError(ParseError::Code::BadRule, 0,
                                 where + ": consequent index " + std::to_string(idx) +
                                     " out of range for output " + std::to_string(d + 1));
        }
        if (!(rule.weight > 0.0) || rule.weight > 1.0)
            throw ParseError(ParseError::Code::BadRule, 0,
                             where + ": weight must be in (0, 1]");
    }
    return doc;
}

ObsDocument parse_obs(const std::string& text) {
    ObsDocument doc;
    bool in_observation = false;
    std::vector<std::optional<MembershipDecl>> slots;
    std::vector<int> slot_lines;

    for (const Line& ln : significant_lines(text)) {
        if (ln.text.front() == '[') {
            const std::size_t close = ln.text.find(']');
            if (close == std::string::npos)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "unterminated section header");
            const std::string name = lower(trim(ln.text.substr(1, close - 1)));
            if (name != "observation")
                throw ParseError(ParseError::Code::UnknownSection, ln.number,
                                 "unknown section [" + trim(ln.text.substr(1, close - 1)) +
                                     "] in an observation file");
            in_observation = true;
            continue;
        }
        const auto kv = split_key_value(ln.text);
        if (!kv)
            throw ParseError(ParseError::Code::MalformedLine, ln.number,
                             "expected Key=Value");
        const std::string key = lower(kv->key);
        if (key == "numinputs") {
            doc.num_inputs = required_int(*kv, ln.number);
        } else if (key == "obsname") {
            doc.name = unquote(kv->value, ln.number);
        } else if (key.size() > 3 && key.substr(0, 3) == "obs") {
            if (!in_observation)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "observation declared before [Observation]");
            const auto slot = parse_int(key.substr(3));
            if (!slot || *slot < 1)
                throw ParseError(ParseError::Code::MalformedLine, ln.number,
                                 "bad observation key '" + kv->key + "'");
            const auto idx = static_cast<std::size_t>(*slot - 1);
            if (slots.size() <= idx) {
                slots.resize(idx + 1);
                slot_lines.resize(idx + 1, 0);
            }
            if (slots[idx])
                throw ParseError(ParseError::Code::DuplicateDefinition, ln.number,
                                 "OBS" + std::to_string(*slot) + " defined twice");
            slots[idx] = parse_mf_value(kv->value, ln.number);
            slot_lines[idx] = ln.number;
        }
        // Other keys tolerated as in parse_fis.
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i])
            throw ParseError(ParseError::Code::CountMismatch, 0,
                             "OBS" + std::to_string(i + 1) + " is missing");
        check_kind_arity(*slots[i], slot_lines[i]);
        check_cnf(*slots[i], slot_lines[i]);
        doc.observations.push_back(std::move(*slots[i]));
    }
    if (doc.num_inputs != static_cast<int>(doc.observations.size()))
        throw ParseError(ParseError::Code::CountMismatch, 0,
                         "NumInputs=" + std::to_string(doc.num_inputs) + " but " +
                             std::to_string(doc.observations.size()) + " observations found");
    return doc;
}

} // namespace fri
