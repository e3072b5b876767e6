#include "ctx/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ctx/errors.hpp"

namespace ctx {

namespace {

const std::vector<std::string> kBinary{"0", "1"};

RDistribution rational_table(const MeasurementScenario& scenario,
                             const std::vector<std::string>& context_names,
                             std::vector<std::pair<std::vector<std::size_t>, Rational>> cells) {
    const auto context = scenario.context_from_names(context_names);
    RDistribution::WeightMap weights;
    for (auto& [outcomes, weight] : cells) {
        weights.emplace(std::move(outcomes), std::move(weight));
    }
    return RDistribution(Semiring::NonnegRational, context, std::move(weights));
}

RDistribution boolean_table(const MeasurementScenario& scenario,
                            const std::vector<std::string>& context_names,
                            std::vector<std::vector<std::size_t>> support) {
    const auto context = scenario.context_from_names(context_names);
    RDistribution::WeightMap weights;
    for (auto& outcomes : support) {
        weights.emplace(std::move(outcomes), Rational(1));
    }
    return RDistribution(Semiring::Boolean, context, std::move(weights));
}

EmpiricalModel bell_table() {
    MeasurementScenario scenario = bell_scenario();
    const Rational half(1, 2), eighth(1, 8), three_eighths(3, 8);
    std::vector<RDistribution> tables;
    tables.push_back(rational_table(scenario, {"a1", "b1"},
                                    {{{0, 0}, half}, {{1, 1}, half}}));
    tables.push_back(rational_table(scenario, {"a1", "b2"},
                                    {{{0, 0}, three_eighths},
                                     {{1, 0}, eighth},
                                     {{0, 1}, eighth},
                                     {{1, 1}, three_eighths}}));
    tables.push_back(rational_table(scenario, {"a2", "b1"},
                                    {{{0, 0}, three_eighths},
                                     {{1, 0}, eighth},
                                     {{0, 1}, eighth},
                                     {{1, 1}, three_eighths}}));
    tables.push_back(rational_table(scenario, {"a2", "b2"},
                                    {{{0, 0}, eighth},
                                     {{1, 0}, three_eighths},
                                     {{0, 1}, three_eighths},
                                     {{1, 1}, eighth}}));
    return EmpiricalModel(std::move(scenario), Semiring::NonnegRational, std::move(tables));
}

EmpiricalModel hardy_table() {
    // Four pinned cells; every unspecified cell is possible.
    MeasurementScenario scenario = bell_scenario();
    std::vector<RDistribution> tables;
    tables.push_back(boolean_table(scenario, {"a1", "b1"}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a1", "b2"}, {{1, 0}, {0, 1}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a2", "b1"}, {{1, 0}, {0, 1}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a2", "b2"}, {{0, 0}, {1, 0}, {0, 1}}));
    return EmpiricalModel(std::move(scenario), Semiring::Boolean, std::move(tables));
}

EmpiricalModel pr_box() {
    MeasurementScenario scenario = bell_scenario();
    std::vector<RDistribution> tables;
    tables.push_back(boolean_table(scenario, {"a1", "b1"}, {{0, 0}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a1", "b2"}, {{0, 0}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a2", "b1"}, {{0, 0}, {1, 1}}));
    tables.push_back(boolean_table(scenario, {"a2", "b2"}, {{1, 0}, {0, 1}}));
    return EmpiricalModel(std::move(scenario), Semiring::Boolean, std::move(tables));
}

EmpiricalModel specker_triangle() {
    const std::vector<BooleanEquation> equations{
        {"x1", "x2", true}, {"x2", "x3", true}, {"x3", "x1", true}};
    return equation_system(equations);
}

EmpiricalModel ghz_support() {
    const EmpiricalModel probabilistic =
        generate_model(ghz_state(3), ghz_settings(), ghz_scenario());
    return possibilistic_collapse(probabilistic);
}

}  // namespace

MeasurementScenario bell_scenario() {
    return MeasurementScenario(
        {"a1", "a2", "b1", "b2"},
        {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}},
        {{"a1", kBinary}, {"a2", kBinary}, {"b1", kBinary}, {"b2", kBinary}});
}

MeasurementScenario ghz_scenario() {
    return MeasurementScenario(
        {"ax", "ay", "bx", "by", "cx", "cy"},
        {{"ax", "bx", "cx"}, {"ax", "by", "cy"}, {"ay", "bx", "cy"}, {"ay", "by", "cx"}},
        {{"ax", kBinary},
         {"ay", kBinary},
         {"bx", kBinary},
         {"by", kBinary},
         {"cx", kBinary},
         {"cy", kBinary}});
}

SettingTable bell_settings() {
    const double third = std::numbers::pi / 3.0;
    SettingTable settings;
    settings.party_angles.push_back({{"a1", 0.0}, {"a2", third}});
    settings.party_angles.push_back({{"b1", 0.0}, {"b2", third}});
    return settings;
}

SettingTable ghz_settings() {
    const double y = std::numbers::pi / 2.0;
    SettingTable settings;
    settings.party_angles.push_back({{"ax", 0.0}, {"ay", y}});
    settings.party_angles.push_back({{"bx", 0.0}, {"by", y}});
    settings.party_angles.push_back({{"cx", 0.0}, {"cy", y}});
    return settings;
}

std::vector<Proposition> bell_propositions(const MeasurementScenario& scenario) {
    const auto zero_atom = [&](const char* name) {
        const std::size_t variable = scenario.variable_index(name);
        const auto& labels = scenario.outcomes(variable);
        const auto it = std::ranges::find(labels, "0");
        if (it == labels.end()) {
            throw CorpusError("variable '" + std::string(name) + "' has no outcome '0'");
        }
        return Formula::atom(variable, static_cast<std::size_t>(it - labels.begin()));
    };
    const auto context = [&](const char* a, const char* b) {
        return scenario.context_from_names(std::vector<std::string>{a, b});
    };
    std::vector<Proposition> props;
    props.push_back({context("a1", "b1"),
                     Formula::connective(Formula::Kind::Iff, zero_atom("a1"), zero_atom("b1"))});
    props.push_back({context("a1", "b2"),
                     Formula::connective(Formula::Kind::Iff, zero_atom("a1"), zero_atom("b2"))});
    props.push_back({context("a2", "b1"),
                     Formula::connective(Formula::Kind::Iff, zero_atom("a2"), zero_atom("b1"))});
    props.push_back({context("a2", "b2"),
                     Formula::connective(Formula::Kind::Xor, zero_atom("a2"), zero_atom("b2"))});
    return props;
}

EmpiricalModel equation_system(std::span<const BooleanEquation> equations) {
    if (equations.empty()) {
        throw CorpusError("equation system needs at least one equation");
    }
    std::vector<std::string> variables;
    const auto intern = [&](const std::string& name) {
        if (std::ranges::find(variables, name) == variables.end()) {
            variables.push_back(name);
        }
    };
    for (const auto& equation : equations) {
        if (equation.left == equation.right) {
            throw CorpusError("equation relates variable '" + equation.left + "' to itself");
        }
        intern(equation.left);
        intern(equation.right);
    }

    std::map<std::string, std::vector<std::string>> outcomes;
    for (const auto& name : variables) outcomes[name] = kBinary;

    // Group equations by variable pair; a context's table holds the
    // assignments satisfying every equation on that pair.
    std::vector<std::vector<std::string>> context_names;
    std::map<std::vector<std::string>, std::vector<BooleanEquation>> groups;
    for (const auto& equation : equations) {
        std::vector<std::string> key{equation.left, equation.right};
        std::sort(key.begin(), key.end());
        if (!groups.contains(key)) {
            context_names.push_back(key);
        }
        groups[key].push_back(equation);
    }

    MeasurementScenario scenario(variables, context_names, outcomes);
    std::map<std::vector<std::size_t>, RDistribution> tables;
    for (const auto& [key, group] : groups) {
        const auto context = scenario.context_from_names(key);
        RDistribution::WeightMap weights;
        for (std::size_t first = 0; first < 2; ++first) {
            for (std::size_t second = 0; second < 2; ++second) {
                const auto value_of = [&](const std::string& name) {
                    return name == key[0] ? first : second;
                };
                const bool satisfied = std::ranges::all_of(group, [&](const BooleanEquation& eq) {
                    const std::size_t expected =
                        eq.negated ? 1 - value_of(eq.right) : value_of(eq.right);
                    return value_of(eq.left) == expected;
                });
                if (satisfied) {
                    weights.emplace(std::vector<std::size_t>{first, second}, Rational(1));
                }
            }
        }
        tables.emplace(context, RDistribution(Semiring::Boolean, context, std::move(weights)));
    }
    return EmpiricalModel::from_tables(std::move(scenario), Semiring::Boolean, tables);
}

EmpiricalModel liar_cycle(std::size_t n) {
    if (n < 2) {
        throw CorpusError("liar cycle needs length >= 2");
    }
    std::vector<BooleanEquation> equations;
    equations.reserve(n);
    const auto name = [](std::size_t i) { return "x" + std::to_string(i + 1); };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        equations.push_back({name(i), name(i + 1), false});
    }
    equations.push_back({name(n - 1), name(0), true});
    return equation_system(equations);
}

EmpiricalModel drop_context(const EmpiricalModel& model, std::span<const std::size_t> context) {
    const auto& scenario = model.scenario();
    const std::size_t dropped = scenario.context_index(context);
    if (dropped == MeasurementScenario::npos) {
        throw ModelError("context '" + scenario.context_label(context) +
                         "' is not a maximal context of the model");
    }
    if (scenario.contexts().size() < 2) {
        throw ModelError("cannot remove the last context");
    }

    std::vector<bool> keep_variable(scenario.variable_count(), false);
    std::vector<std::vector<std::string>> context_names;
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        if (i == dropped) continue;
        std::vector<std::string> names;
        for (std::size_t v : scenario.contexts()[i]) {
            keep_variable[v] = true;
            names.push_back(scenario.variables()[v]);
        }
        context_names.push_back(std::move(names));
    }
    std::vector<std::string> variables;
    std::map<std::string, std::vector<std::string>> outcomes;
    for (std::size_t v = 0; v < scenario.variable_count(); ++v) {
        if (keep_variable[v]) {
            variables.push_back(scenario.variables()[v]);
            outcomes[variables.back()] = scenario.outcomes(v);
        }
    }

    MeasurementScenario reduced(variables, context_names, outcomes);
    std::map<std::vector<std::size_t>, RDistribution> tables;
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        if (i == dropped) continue;
        std::vector<std::size_t> new_context;
        for (std::size_t v : scenario.contexts()[i]) {
            new_context.push_back(reduced.variable_index(scenario.variables()[v]));
        }
        // Variable order is preserved, so the outcome keys carry over.
        tables.emplace(new_context, RDistribution(model.semiring(), new_context,
                                                  RDistribution::WeightMap(
                                                      model.table(i).weights())));
    }
    return EmpiricalModel::from_tables(std::move(reduced), model.semiring(), tables);
}

EmpiricalModel builtin(std::string_view name) {
    if (name == "bell") return bell_table();
    if (name == "hardy") return hardy_table();
    if (name == "pr") return pr_box();
    if (name == "ghz") return ghz_support();
    if (name == "specker") return specker_triangle();
    if (name.starts_with("liar:")) {
        const std::string_view suffix = name.substr(5);
        std::size_t n = 0;
        if (suffix.empty() ||
            !std::ranges::all_of(suffix, [](char c) { return c >= '0' && c <= '9'; })) {
            throw CorpusError("malformed liar cycle length in '" + std::string(name) + "'");
        }
        for (char c : suffix) n = n * 10 + static_cast<std::size_t>(c - '0');
        return liar_cycle(n);
    }
    throw CorpusError("unknown builtin model '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"bell", "hardy", "pr", "ghz", "specker", "liar:N"};
}

}  // namespace ctx
