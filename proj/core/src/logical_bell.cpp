#include "ctx/logical_bell.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ctx/errors.hpp"

namespace ctx {

Formula::Ptr Formula::constant(bool value) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = value ? Kind::True : Kind::False;
    return f;
}

Formula::Ptr Formula::atom(std::size_t variable, std::size_t outcome) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Atom;
    f->variable_ = variable;
    f->outcome_ = outcome;
    return f;
}

Formula::Ptr Formula::negation(Ptr operand) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Not;
    f->lhs_ = std::move(operand);
    return f;
}

Formula::Ptr Formula::connective(Kind kind, Ptr lhs, Ptr rhs) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = kind;
    f->lhs_ = std::move(lhs);
    f->rhs_ = std::move(rhs);
    return f;
}

namespace {

template <typename Lookup>
bool eval_formula(const Formula& f, const Lookup& value_of) {
    switch (f.kind()) {
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Atom: return value_of(f.variable()) == f.outcome();
        case Formula::Kind::Not: return !eval_formula(*f.lhs(), value_of);
        case Formula::Kind::And:
            return eval_formula(*f.lhs(), value_of) && eval_formula(*f.rhs(), value_of);
        case Formula::Kind::Or:
            return eval_formula(*f.lhs(), value_of) || eval_formula(*f.rhs(), value_of);
        case Formula::Kind::Implies:
            return !eval_formula(*f.lhs(), value_of) || eval_formula(*f.rhs(), value_of);
        case Formula::Kind::Iff:
            return eval_formula(*f.lhs(), value_of) == eval_formula(*f.rhs(), value_of);
        case Formula::Kind::Xor:
            return eval_formula(*f.lhs(), value_of) != eval_formula(*f.rhs(), value_of);
    }
    return false;
}

}  // namespace

bool Formula::evaluate(const LocalAssignment& assignment) const {
    return eval_formula(*this, [&](std::size_t variable) {
        const auto it = std::ranges::lower_bound(assignment.context, variable);
        if (it == assignment.context.end() || *it != variable) {
            throw ModelError("formula atom outside the assignment's context");
        }
        return assignment.outcomes[static_cast<std::size_t>(it - assignment.context.begin())];
    });
}

bool Formula::evaluate(const GlobalAssignment& global) const {
    return eval_formula(*this, [&](std::size_t variable) {
        if (variable >= global.outcomes.size()) {
            throw ModelError("formula atom outside the global assignment");
        }
        return global.outcomes[variable];
    });
}

std::vector<std::size_t> Formula::atom_variables() const {
    std::vector<std::size_t> vars;
    auto walk = [&](auto&& self, const Formula& f) -> void {
        if (f.kind() == Kind::Atom) {
            vars.push_back(f.variable());
        }
        if (f.lhs()) self(self, *f.lhs());
        if (f.rhs()) self(self, *f.rhs());
    };
    walk(walk, *this);
    std::ranges::sort(vars);
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::string formula_to_string(const MeasurementScenario& scenario, const Formula& formula) {
    std::ostringstream out;
    auto walk = [&](auto&& self, const Formula& f, bool parenthesize) -> void {
        switch (f.kind()) {
            case Formula::Kind::True: out << "true"; return;
            case Formula::Kind::False: out << "false"; return;
            case Formula::Kind::Atom:
                out << scenario.variables()[f.variable()] << '='
                    << scenario.outcomes(f.variable()).at(f.outcome());
                return;
            case Formula::Kind::Not:
                out << '!';
                self(self, *f.lhs(), true);
                return;
            default: break;
        }
        const char* op = "?";
        switch (f.kind()) {
            case Formula::Kind::And: op = " & "; break;
            case Formula::Kind::Or: op = " | "; break;
            case Formula::Kind::Implies: op = " -> "; break;
            case Formula::Kind::Iff: op = " <-> "; break;
            case Formula::Kind::Xor: op = " (+) "; break;
            default: break;
        }
        if (parenthesize) out << '(';
        self(self, *f.lhs(), true);
        out << op;
        self(self, *f.rhs(), true);
        if (parenthesize) out << ')';
    };
    walk(walk, formula, false);
    return out.str();
}

namespace {

// Recursive-descent parser for the documented grammar:
//   formula := implies ( ("<->" | "(+)") implies )*
//   implies := or ( "->" implies )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "!" unary | "(" formula ")" | "true" | "false" | atom
//   atom    := NAME "=" NAME
class FormulaParser {
public:
    FormulaParser(const MeasurementScenario& scenario, std::string_view text)
        : scenario_(scenario), text_(text) {}

    Formula::Ptr parse() {
        auto f = parse_iff();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("formula parse error at position " + std::to_string(pos_) + ": " +
                         message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool peek(std::string_view token) {
        skip_space();
        return text_.substr(pos_, token.size()) == token;
    }

    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string parse_name(const char* what) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start) {
            fail(std::string("expected ") + what);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Formula::Ptr parse_iff() {
        auto lhs = parse_implies();
        while (true) {
            if (consume("<->")) {
                lhs = Formula::connective(Formula::Kind::Iff, lhs, parse_implies());
            } else if (consume("(+)")) {
                lhs = Formula::connective(Formula::Kind::Xor, lhs, parse_implies());
            } else {
                return lhs;
            }
        }
    }

    Formula::Ptr parse_implies() {
        auto lhs = parse_or();
        if (peek("->") && !peek("<->")) {
            consume("->");
            return Formula::connective(Formula::Kind::Implies, lhs, parse_implies());
        }
        return lhs;
    }

    Formula::Ptr parse_or() {
        auto lhs = parse_and();
        while (consume("|")) {
            lhs = Formula::connective(Formula::Kind::Or, lhs, parse_and());
        }
        return lhs;
    }

    Formula::Ptr parse_and() {
        auto lhs = parse_unary();
        while (consume("&")) {
            lhs = Formula::connective(Formula::Kind::And, lhs, parse_unary());
        }
        return lhs;
    }

    Formula::Ptr parse_unary() {
        if (consume("!")) {
            return Formula::negation(parse_unary());
        }
        // "(+)" never reaches here: a '(' at unary position is a group.
        if (consume("(")) {
            auto f = parse_iff();
            if (!consume(")")) {
                fail("expected ')'");
            }
            return f;
        }
        const std::string name = parse_name("a variable name, 'true' or 'false'");
        if (name == "true") return Formula::constant(true);
        if (name == "false") return Formula::constant(false);
        if (!scenario_.has_variable(name)) {
            fail("unknown variable '" + name + "'");
        }
        const std::size_t variable = scenario_.variable_index(name);
        if (!consume("=")) {
            fail("expected '=' after variable '" + name + "'");
        }
        const std::string label = parse_name("an outcome label");
        const auto& labels = scenario_.outcomes(variable);
        const auto it = std::ranges::find(labels, label);
        if (it == labels.end()) {
            fail("'" + label + "' is not an outcome of variable '" + name + "'");
        }
        return Formula::atom(variable, static_cast<std::size_t>(it - labels.begin()));
    }

    const MeasurementScenario& scenario_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula::Ptr parse_formula(const MeasurementScenario& scenario, std::string_view text) {
    return FormulaParser(scenario, text).parse();
}

Proposition parse_proposition(const MeasurementScenario& scenario, std::string_view line) {
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("proposition line needs the form 'context : formula'");
    }
    std::vector<std::string> names;
    std::string current;
    for (char c : line.substr(0, colon)) {
        if (c == ',') {
            names.push_back(std::move(current));
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(std::move(current));

    Proposition proposition;
    proposition.context = scenario.context_from_names(names);
    if (proposition.context.empty()) {
        throw ParseError("proposition has an empty context");
    }
    proposition.formula = parse_formula(scenario, line.substr(colon + 1));
    for (std::size_t v : proposition.formula->atom_variables()) {
        if (!std::ranges::binary_search(proposition.context, v)) {
            throw ParseError("atom variable '" + scenario.variables()[v] +
                             "' is outside the proposition's context");
        }
    }
    return proposition;
}

std::vector<Proposition> parse_propositions(const MeasurementScenario& scenario,
                                            std::string_view text) {
    std::vector<Proposition> propositions;
    std::size_t line_number = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (std::ranges::all_of(line,
                                [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            continue;
        try {
            propositions.push_back(parse_proposition(scenario, line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return propositions;
}

Rational eval_probability(const EmpiricalModel& model, const Proposition& proposition) {
    const auto& scenario = model.scenario();
    const std::size_t index = scenario.context_index(proposition.context);
    if (index == MeasurementScenario::npos) {
        throw ModelError("proposition context '" + scenario.context_label(proposition.context) +
                         "' is not a maximal context of the model");
    }
    Rational measure(0);
    for (const auto& assignment : enumerate_assignments(scenario, proposition.context)) {
        if (proposition.formula->evaluate(assignment)) {
            measure = semiring_add(model.semiring(), measure,
                                   model.table(index).weight(assignment.outcomes));
        }
    }
    return measure;
}

std::optional<GlobalAssignment> jointly_satisfiable(const MeasurementScenario& scenario,
                                                    std::span<const Proposition> propositions) {
    const std::uint64_t count = scenario.global_count();
    for (std::uint64_t g = 0; g < count; ++g) {
        GlobalAssignment global = scenario.nth_global(g);
        const bool all = std::ranges::all_of(propositions, [&](const Proposition& p) {
            return p.formula->evaluate(global);
        });
        if (all) {
            return global;
        }
    }
    return std::nullopt;
}

BellResult logical_bell(const EmpiricalModel& model, std::span<const Proposition> propositions) {
    BellResult result;
    result.sum = 0;
    for (const auto& proposition : propositions) {
        result.probabilities.push_back(eval_probability(model, proposition));
        result.sum += result.probabilities.back();
    }
    result.bound = static_cast<std::int64_t>(propositions.size()) - 1;
    result.satisfiable = jointly_satisfiable(model.scenario(), propositions).has_value();
    // The bound applies only to jointly unsatisfiable families.
    if (!result.satisfiable && result.sum > result.bound) {
        result.violation = result.sum - result.bound;
    } else {
        result.violation = 0;
    }
    return result;
}

std::vector<Proposition> canonical_support_propositions(const EmpiricalModel& model) {
    const auto& scenario = model.scenario();
    std::vector<Proposition> propositions;
    propositions.reserve(scenario.contexts().size());
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        const auto& context = scenario.contexts()[i];
        Formula::Ptr disjunction;
        for (const auto& assignment : enumerate_assignments(scenario, context)) {
            if (model.table(i).weight(assignment.outcomes) == 0) continue;
            Formula::Ptr conjunction;
            for (std::size_t p = 0; p < context.size(); ++p) {
                auto atom = Formula::atom(context[p], assignment.outcomes[p]);
                conjunction = conjunction
                                  ? Formula::connective(Formula::Kind::And, conjunction, atom)
                                  : atom;
            }
            disjunction = disjunction
                              ? Formula::connective(Formula::Kind::Or, disjunction, conjunction)
                              : conjunction;
        }
        if (!disjunction) {
            disjunction = Formula::constant(false);  // empty support
        }
        propositions.push_back({context, std::move(disjunction)});
    }
    return propositions;
}

}  // namespace ctx
