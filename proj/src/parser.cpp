// Copyright 2026 The qreason Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qreason/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "qreason/util.hpp"

namespace qreason {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') {
            break;
        }
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)),
                       static_cast<int>(start) + 1});
    }
    return out;
}

bool is_name(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    if (!(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

class LineParser {
  public:
    LineParser(int line, std::vector<Token> tokens,
               std::vector<ParseError> &errors)
        : line_(line), tokens_(std::move(tokens)), errors_(errors) {}

    [[nodiscard]] bool done() const { return pos_ >= tokens_.size(); }
    [[nodiscard]] const Token *peek() const {
        return done() ? nullptr : &tokens_[pos_];
    }
    const Token &next() { return tokens_[pos_++]; }

    int end_column() const {
        if (tokens_.empty()) {
            return 1;
        }
        const Token &last = tokens_.back();
        return last.column + static_cast<int>(last.text.size());
    }

    void error(ParseErrorKind kind, int column, std::string message) {
        errors_.push_back({{line_, column}, kind, std::move(message)});
    }

    /// Consumes one proposition name; reports a syntax error otherwise.
    std::optional<Token> expect_name(const char *what) {
        if (done()) {
            error(ParseErrorKind::Syntax, end_column(),
                  std::string("expected ") + what);
            return std::nullopt;
        }
        Token t = next();
        if (!is_name(t.text)) {
            error(ParseErrorKind::Syntax, t.column,
                  "expected " + std::string(what) + ", got '" + t.text + "'");
            return std::nullopt;
        }
        return t;
    }

    void expect_end() {
        if (!done()) {
            const Token &t = tokens_[pos_];
            error(ParseErrorKind::Syntax, t.column,
                  "unexpected trailing token '" + t.text + "'");
        }
    }

    /// Parses `key=FLOAT` with an optional trailing `!` freeze marker.
    /// Returns {value, trainable} on success.
    std::optional<std::pair<double, bool>> parse_value_token(const Token &t,
                                                             const char *key) {
        const std::string prefix = std::string(key) + "=";
        if (t.text.rfind(prefix, 0) != 0) {
            error(ParseErrorKind::Syntax, t.column,
                  "expected '" + prefix + "FLOAT', got '" + t.text + "'");
            return std::nullopt;
        }
        std::string_view rest = std::string_view(t.text).substr(prefix.size());
        bool trainable = true;
        if (!rest.empty() && rest.back() == '!') {
            trainable = false;
            rest.remove_suffix(1);
        }
        auto value = parse_double(rest);
        if (!value || !std::isfinite(*value)) {
            error(ParseErrorKind::Syntax,
                  t.column + static_cast<int>(prefix.size()),
                  "invalid number '" + std::string(rest) + "'");
            return std::nullopt;
        }
        return std::make_pair(*value, trainable);
    }

  private:
    int line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<ParseError> &errors_;
};

void parse_prop(LineParser &p, ProblemSpec &spec, int line) {
    bool any = false;
    while (!p.done()) {
        auto name = p.expect_name("proposition name");
        if (!name) {
            return;
        }
        spec.propositions.push_back({name->text, line});
        any = true;
    }
    if (!any) {
        p.error(ParseErrorKind::Syntax, p.end_column(),
                "prop requires at least one name");
    }
}

void parse_prior(LineParser &p, ProblemSpec &spec, int line) {
    auto name = p.expect_name("proposition name");
    if (!name) {
        return;
    }
    if (p.done()) {
        p.error(ParseErrorKind::Syntax, p.end_column(), "expected prior value");
        return;
    }
    const Token t = p.next();
    auto value = parse_double(t.text);
    if (!value) {
        p.error(ParseErrorKind::Syntax, t.column,
                "invalid number '" + t.text + "'");
        return;
    }
    p.expect_end();
    spec.priors.push_back({name->text, *value, line});
}

void parse_rule(LineParser &p, ProblemSpec &spec, int line) {
    RuleDecl rule;
    rule.line = line;
    auto first = p.expect_name("antecedent name");
    if (!first) {
        return;
    }
    rule.antecedents.push_back(first->text);

    std::optional<char> sep;
    while (true) {
        const Token *t = p.peek();
        if (!t) {
            p.error(ParseErrorKind::Syntax, p.end_column(), "expected '=>'");
            return;
        }
        if (t->text == "=>") {
            p.next();
            break;
        }
        if (t->text == "&" || t->text == "|") {
            const char c = t->text[0];
            if (sep && *sep != c) {
                p.error(ParseErrorKind::Syntax, t->column,
                        "cannot mix '&' and '|' in one rule");
                return;
            }
            sep = c;
            p.next();
            auto name = p.expect_name("antecedent name");
            if (!name) {
                return;
            }
            rule.antecedents.push_back(name->text);
            continue;
        }
        p.error(ParseErrorKind::Syntax, t->column,
                "expected '&', '|' or '=>', got '" + t->text + "'");
        return;
    }
    rule.mode = (sep && *sep == '|') ? RuleMode::Or : RuleMode::And;

    auto consequent = p.expect_name("consequent name");
    if (!consequent) {
        return;
    }
    rule.consequent = consequent->text;

    if (!p.done()) {
        const Token t = p.next();
        auto value = p.parse_value_token(t, "theta");
        if (!value) {
            return;
        }
        rule.theta = value->first;
        rule.trainable = value->second;
    }
    p.expect_end();
    spec.rules.push_back(std::move(rule));
}

void parse_excl(LineParser &p, ProblemSpec &spec, int line) {
    ConstraintDecl cons;
    cons.line = line;
    while (!p.done()) {
        const Token *t = p.peek();
        if (t->text.rfind("phi=", 0) == 0) {
            const Token v = p.next();
            auto value = p.parse_value_token(v, "phi");
            if (!value) {
                return;
            }
            cons.phi = value->first;
            cons.trainable = value->second;
            p.expect_end();
            break;
        }
        auto name = p.expect_name("proposition name");
        if (!name) {
            return;
        }
        cons.members.push_back(name->text);
    }
    if (cons.members.size() < 2) {
        p.error(ParseErrorKind::Arity, p.end_column(),
                "excl requires at least two propositions");
        return;
    }
    spec.constraints.push_back(std::move(cons));
}

void parse_layers(LineParser &p, ProblemSpec &spec, int line) {
    if (p.done()) {
        p.error(ParseErrorKind::Syntax, p.end_column(), "expected layer count");
        return;
    }
    const Token t = p.next();
    auto value = parse_int(t.text);
    if (!value) {
        p.error(ParseErrorKind::Syntax, t.column,
                "invalid integer '" + t.text + "'");
        return;
    }
    p.expect_end();
    if (*value < 1) {
        p.error(ParseErrorKind::Range, t.column, "layers must be >= 1");
        return;
    }
    if (spec.layers_line != 0) {
        p.error(ParseErrorKind::DuplicateName, t.column,
                "layers declared twice");
        return;
    }
    spec.layers = static_cast<std::size_t>(*value);
    spec.layers_line = line;
}

void parse_target(LineParser &p, ProblemSpec &spec, int line) {
    auto name = p.expect_name("proposition name");
    if (!name) {
        return;
    }
    if (p.done()) {
        p.error(ParseErrorKind::Syntax, p.end_column(),
                "expected target value 0 or 1");
        return;
    }
    const Token t = p.next();
    p.expect_end();
    if (t.text != "0" && t.text != "1") {
        p.error(ParseErrorKind::Range, t.column,
                "target value must be 0 or 1, got '" + t.text + "'");
        return;
    }
    spec.targets.push_back({name->text, t.text == "1" ? 1 : 0, line});
}

void parse_query(LineParser &p, ProblemSpec &spec, int line) {
    QueryDecl query;
    query.line = line;
    while (!p.done()) {
        auto name = p.expect_name("proposition name");
        if (!name) {
            return;
        }
        query.names.push_back(name->text);
    }
    if (query.names.empty()) {
        p.error(ParseErrorKind::Syntax, p.end_column(),
                "query requires one or two names");
        return;
    }
    if (query.names.size() > 2) {
        p.error(ParseErrorKind::Arity, 1,
                "query takes at most two propositions");
        return;
    }
    spec.queries.push_back(std::move(query));
}

} // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::Syntax:
        return "syntax";
    case ParseErrorKind::UnknownName:
        return "unknown-name";
    case ParseErrorKind::DuplicateName:
        return "duplicate-name";
    case ParseErrorKind::Range:
        return "range";
    case ParseErrorKind::Arity:
        return "arity";
    }
    return "syntax";
}

std::string format_error(const ParseError &error) {
    std::ostringstream out;
    out << error.span.line << ":" << error.span.column << ": "
        << to_string(error.kind) << ": " << error.message;
    return out.str();
}

ParseResult parse(std::string_view text, std::size_t max_qubits) {
    ParseResult result;
    ProblemSpec spec;
    std::vector<ParseError> errors;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        Token head = tokens.front();
        tokens.erase(tokens.begin());
        LineParser p(line_no, std::move(tokens), errors);
        if (head.text == "prop") {
            parse_prop(p, spec, line_no);
        } else if (head.text == "prior") {
            parse_prior(p, spec, line_no);
        } else if (head.text == "rule") {
            parse_rule(p, spec, line_no);
        } else if (head.text == "excl") {
            parse_excl(p, spec, line_no);
        } else if (head.text == "layers") {
            parse_layers(p, spec, line_no);
        } else if (head.text == "target") {
            parse_target(p, spec, line_no);
        } else if (head.text == "query") {
            parse_query(p, spec, line_no);
        } else {
            errors.push_back({{line_no, head.column},
                              ParseErrorKind::Syntax,
                              "unknown directive '" + head.text + "'"});
        }
    }

    auto semantic = validate(spec, max_qubits);
    errors.insert(errors.end(), semantic.begin(), semantic.end());

    result.errors = std::move(errors);
    if (result.errors.empty()) {
        result.spec = std::move(spec);
    }
    return result;
}

std::vector<ParseError> validate(const ProblemSpec &spec,
                                 std::size_t max_qubits) {
    std::vector<ParseError> errors;
    auto report = [&](int line, ParseErrorKind kind, std::string message) {
        errors.push_back({{std::max(line, 1), 1}, kind, std::move(message)});
    };

    if (spec.propositions.empty()) {
        report(1, ParseErrorKind::Range, "at least one proposition required");
    }
    if (spec.num_qubits() > max_qubits) {
        report(spec.propositions.empty() ? 1 : spec.propositions.back().line,
               ParseErrorKind::Range,
               std::to_string(spec.num_qubits()) +
                   " propositions exceed the qubit cap of " +
                   std::to_string(max_qubits));
    }

    std::unordered_set<std::string> seen;
    for (const auto &p : spec.propositions) {
        if (!is_name(p.name)) {
            report(p.line, ParseErrorKind::Syntax,
                   "invalid proposition name '" + p.name + "'");
        }
        if (!seen.insert(p.name).second) {
            report(p.line, ParseErrorKind::DuplicateName,
                   "proposition '" + p.name + "' declared twice");
        }
    }

    auto check_known = [&](const std::string &name, int line) {
        if (seen.count(name) == 0) {
            report(line, ParseErrorKind::UnknownName,
                   "unknown proposition '" + name + "'");
            return false;
        }
        return true;
    };

    std::unordered_set<std::string> prior_names;
    for (const auto &p : spec.priors) {
        check_known(p.name, p.line);
        if (!prior_names.insert(p.name).second) {
            report(p.line, ParseErrorKind::DuplicateName,
                   "prior for '" + p.name + "' declared twice");
        }
        if (!(p.value >= 0.0 && p.value <= 1.0)) {
            report(p.line, ParseErrorKind::Range,
                   "prior for '" + p.name + "' must lie in [0, 1], got " +
                       format_double(p.value));
        }
    }

    for (const auto &r : spec.rules) {
        std::unordered_set<std::string> members;
        for (const auto &a : r.antecedents) {
            check_known(a, r.line);
            if (!members.insert(a).second) {
                report(r.line, ParseErrorKind::DuplicateName,
                       "rule lists antecedent '" + a + "' twice");
            }
        }
        if (check_known(r.consequent, r.line) && members.count(r.consequent)) {
            report(r.line, ParseErrorKind::Arity,
                   "rule consequent '" + r.consequent +
                       "' appears among its antecedents");
        }
        if (r.antecedents.empty()) {
            report(r.line, ParseErrorKind::Arity,
                   "rule requires at least one antecedent");
        }
    }

    for (const auto &c : spec.constraints) {
        std::unordered_set<std::string> members;
        for (const auto &m : c.members) {
            check_known(m, c.line);
            if (!members.insert(m).second) {
                report(c.line, ParseErrorKind::DuplicateName,
                       "excl lists proposition '" + m + "' twice");
            }
        }
        if (c.members.size() < 2) {
            report(c.line, ParseErrorKind::Arity,
                   "excl requires at least two propositions");
        }
    }

    if (spec.layers < 1) {
        report(spec.layers_line, ParseErrorKind::Range, "layers must be >= 1");
    }

    std::unordered_set<std::string> target_names;
    for (const auto &t : spec.targets) {
        check_known(t.name, t.line);
        if (!target_names.insert(t.name).second) {
            report(t.line, ParseErrorKind::DuplicateName,
                   "target for '" + t.name + "' declared twice");
        }
        if (t.value != 0 && t.value != 1) {
            report(t.line, ParseErrorKind::Range,
                   "target value must be 0 or 1");
        }
    }

    for (const auto &q : spec.queries) {
        if (q.names.empty() || q.names.size() > 2) {
            report(q.line, ParseErrorKind::Arity,
                   "query takes one or two propositions");
            continue;
        }
        for (const auto &n : q.names) {
            check_known(n, q.line);
        }
        if (q.names.size() == 2 && q.names[0] == q.names[1]) {
            report(q.line, ParseErrorKind::Arity,
                   "pair query must name two distinct propositions");
        }
    }

    return errors;
}

std::string serialize(const ProblemSpec &spec) {
    std::ostringstream out;
    out << "prop";
    for (const auto &p : spec.propositions) {
        out << " " << p.name;
    }
    out << "\n";

    const auto priors = spec.prior_vector();
    for (std::size_t i = 0; i < spec.propositions.size(); ++i) {
        out << "prior " << spec.propositions[i].name << " "
            << format_double(priors[i]) << "\n";
    }

    for (const auto &r : spec.rules) {
        out << "rule " << r.antecedents.front();
        const char *sep = r.mode == RuleMode::And ? " & " : " | ";
        for (std::size_t i = 1; i < r.antecedents.size(); ++i) {
            out << sep << r.antecedents[i];
        }
        out << " => " << r.consequent << " theta=" << format_double(r.theta);
        if (!r.trainable) {
            out << "!";
        }
        out << "\n";
    }

    for (const auto &c : spec.constraints) {
        out << "excl";
        for (const auto &m : c.members) {
            out << " " << m;
        }
        out << " phi=" << format_double(c.phi);
        if (!c.trainable) {
            out << "!";
        }
        out << "\n";
    }

    out << "layers " << spec.layers << "\n";

    for (const auto &t : spec.targets) {
        out << "target " << t.name << " " << t.value << "\n";
    }
    for (const auto &q : spec.queries) {
        out << "query";
        for (const auto &n : q.names) {
            out << " " << n;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace qreason
