#include "ctx/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "ctx/errors.hpp"

namespace ctx {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::vector<std::string> split_csv(std::string_view text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(std::move(current));
    return parts;
}

Json cell_map(const MeasurementScenario& scenario, const RDistribution& dist) {
    Json cells = Json::object();
    for (const auto& [outcomes, weight] : dist.weights()) {
        const std::string key = scenario.assignment_label({dist.context(), outcomes});
        if (dist.semiring() == Semiring::Boolean) {
            cells[key] = 1;
        } else {
            cells[key] = to_string(weight);
        }
    }
    return cells;
}

Json scenario_json(const MeasurementScenario& scenario) {
    Json j;
    j["variables"] = scenario.variables();
    Json contexts = Json::array();
    for (const auto& context : scenario.contexts()) {
        Json names = Json::array();
        for (std::size_t v : context) names.push_back(scenario.variables()[v]);
        contexts.push_back(std::move(names));
    }
    j["contexts"] = std::move(contexts);
    Json outcomes = Json::object();
    for (std::size_t v = 0; v < scenario.variable_count(); ++v) {
        outcomes[scenario.variables()[v]] = scenario.outcomes(v);
    }
    j["outcomes"] = std::move(outcomes);
    return j;
}

MeasurementScenario scenario_from(const Json& j, std::vector<std::string>& issues) {
    if (!j.is_object()) {
        issues.push_back("scenario must be a JSON object");
        throw ValidationError("invalid scenario", issues);
    }
    std::vector<std::string> variables;
    std::vector<std::vector<std::string>> contexts;
    std::map<std::string, std::vector<std::string>> outcomes;
    try {
        variables = j.at("variables").get<std::vector<std::string>>();
        contexts = j.at("contexts").get<std::vector<std::vector<std::string>>>();
        for (const auto& [name, labels] : j.at("outcomes").items()) {
            outcomes[name] = labels.get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception& e) {
        issues.push_back(std::string("malformed scenario: ") + e.what());
        throw ValidationError("invalid scenario", issues);
    }
    try {
        return MeasurementScenario(variables, contexts, outcomes);
    } catch (const ScenarioError& e) {
        issues.push_back(e.what());
        throw ValidationError("invalid scenario", issues);
    }
}

}  // namespace

std::string scenario_to_json(const MeasurementScenario& scenario) {
    return scenario_json(scenario).dump(2) + "\n";
}

MeasurementScenario scenario_from_json(std::string_view text) {
    std::vector<std::string> issues;
    return scenario_from(parse_json(text), issues);
}

std::string model_to_json(const EmpiricalModel& model) {
    const auto& scenario = model.scenario();
    Json j;
    j["scenario"] = scenario_json(scenario);
    j["semiring"] = semiring_name(model.semiring());
    Json tables = Json::object();
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        tables[scenario.context_label(scenario.contexts()[i])] =
            cell_map(scenario, model.table(i));
    }
    j["tables"] = std::move(tables);
    return j.dump(2) + "\n";
}

EmpiricalModel model_from_json(std::string_view text) {
    const Json j = parse_json(text);
    std::vector<std::string> issues;
    if (!j.is_object()) {
        issues.push_back("model must be a JSON object");
        throw ValidationError("invalid model", issues);
    }
    if (!j.contains("scenario") || !j.contains("semiring") || !j.contains("tables")) {
        issues.push_back("model needs 'scenario', 'semiring' and 'tables'");
        throw ValidationError("invalid model", issues);
    }

    const MeasurementScenario scenario = scenario_from(j.at("scenario"), issues);

    Semiring semiring = Semiring::NonnegRational;
    const std::string tag = j.at("semiring").is_string() ? j.at("semiring").get<std::string>()
                                                         : std::string();
    if (tag == "rational") {
        semiring = Semiring::NonnegRational;
    } else if (tag == "boolean") {
        semiring = Semiring::Boolean;
    } else {
        issues.push_back("unknown semiring tag '" + tag + "'");
        throw ValidationError("invalid model", issues);
    }

    std::map<std::vector<std::size_t>, RDistribution> tables;
    if (!j.at("tables").is_object()) {
        issues.push_back("'tables' must be an object keyed by context");
        throw ValidationError("invalid model", issues);
    }
    for (const auto& [context_key, cells] : j.at("tables").items()) {
        std::vector<std::size_t> context;
        try {
            context = scenario.context_from_names(split_csv(context_key));
        } catch (const ScenarioError& e) {
            issues.push_back("table '" + context_key + "': " + e.what());
            continue;
        }
        if (scenario.context_index(context) == MeasurementScenario::npos) {
            issues.push_back("table '" + context_key + "' is not a maximal context");
            continue;
        }
        if (!cells.is_object()) {
            issues.push_back("table '" + context_key + "' must be an object");
            continue;
        }
        RDistribution::WeightMap weights;
        for (const auto& [cell_key, value] : cells.items()) {
            const auto labels = split_csv(cell_key);
            if (labels.size() != context.size()) {
                issues.push_back("table '" + context_key + "': cell '" + cell_key +
                                 "' has the wrong arity");
                continue;
            }
            std::vector<std::size_t> outcomes;
            bool ok = true;
            for (std::size_t p = 0; p < context.size(); ++p) {
                const auto& known = scenario.outcomes(context[p]);
                const auto it = std::find(known.begin(), known.end(), labels[p]);
                if (it == known.end()) {
                    issues.push_back("table '" + context_key + "': '" + labels[p] +
                                     "' is not an outcome of '" +
                                     scenario.variables()[context[p]] + "'");
                    ok = false;
                    break;
                }
                outcomes.push_back(static_cast<std::size_t>(it - known.begin()));
            }
            if (!ok) continue;

            Rational weight;
            try {
                if (value.is_string()) {
                    weight = parse_rational(value.get<std::string>());
                } else if (value.is_number_integer()) {
                    weight = Rational(value.get<std::int64_t>());
                } else {
                    throw ParseError("weight must be a rational string or an integer");
                }
            } catch (const ParseError& e) {
                issues.push_back("table '" + context_key + "': cell '" + cell_key + "': " +
                                 e.what());
                continue;
            }
            weights.emplace(std::move(outcomes), std::move(weight));
        }
        tables.emplace(context, RDistribution(semiring, context, std::move(weights)));
    }

    if (!issues.empty()) {
        throw ValidationError("invalid model", issues);
    }
    EmpiricalModel model = [&] {
        try {
            return EmpiricalModel::from_tables(scenario, semiring, tables);
        } catch (const ModelError& e) {
            issues.push_back(e.what());
            throw ValidationError("invalid model", issues);
        }
    }();
    for (const auto& issue : validate(model)) {
        issues.push_back("table '" + issue.location + "': " + issue.message);
    }
    if (!issues.empty()) {
        throw ValidationError("invalid model", issues);
    }
    return model;
}

std::string report_to_json(const MeasurementScenario& scenario, const ContextualityReport& report,
                           ReportLevel level) {
    Json j;
    const bool all = level == ReportLevel::All;
    if (all || level == ReportLevel::Probabilistic) {
        j["probabilistically_contextual"] = report.probabilistically_contextual;
    }
    if (all || level == ReportLevel::Possibilistic) {
        j["possibilistically_contextual"] = report.possibilistically_contextual;
    }
    if (all || level == ReportLevel::Strong) {
        j["strongly_contextual"] = report.strongly_contextual;
    }
    if (all || level == ReportLevel::Probabilistic) {
        if (report.global_section) {
            j["global_section"] = cell_map(scenario, *report.global_section);
        } else {
            j["global_section"] = nullptr;
        }
    }
    if (all || level == ReportLevel::Possibilistic) {
        if (report.witness_section) {
            Json witness;
            witness["context"] = scenario.context_label(report.witness_section->context);
            witness["assignment"] = scenario.assignment_label(*report.witness_section);
            j["witness_section"] = std::move(witness);
        } else {
            j["witness_section"] = nullptr;
        }
    }
    if (all || level == ReportLevel::Strong) {
        j["consistent_global_count"] = report.consistent_global_count;
    }
    return j.dump(2) + "\n";
}

std::string bell_result_to_json(const BellResult& result) {
    Json j;
    Json probabilities = Json::array();
    for (const auto& p : result.probabilities) probabilities.push_back(to_string(p));
    j["probabilities"] = std::move(probabilities);
    j["sum"] = to_string(result.sum);
    j["bound"] = result.bound;
    j["violation"] = to_string(result.violation);
    j["satisfiable"] = result.satisfiable;
    return j.dump(2) + "\n";
}

std::string compatibility_to_json(const MeasurementScenario& scenario,
                                  const CompatibilityReport& report) {
    Json j;
    j["compatible"] = report.compatible;
    Json violations = Json::array();
    for (const auto& violation : report.violations) {
        Json v;
        v["context_a"] = scenario.context_label(scenario.contexts()[violation.context_a]);
        v["context_b"] = scenario.context_label(scenario.contexts()[violation.context_b]);
        v["overlap"] = scenario.context_label(violation.overlap);
        v["marginal_a"] = cell_map(scenario, violation.marginal_a);
        v["marginal_b"] = cell_map(scenario, violation.marginal_b);
        violations.push_back(std::move(v));
    }
    j["violations"] = std::move(violations);
    return j.dump(2) + "\n";
}

SettingTable settings_from_json(std::string_view text) {
    const Json j = parse_json(text);
    SettingTable settings;
    try {
        for (const auto& party : j.at("parties")) {
            std::map<std::string, double> angles;
            for (const auto& [name, angle] : party.at("variables").items()) {
                angles[name] = std::stod(angle.get<std::string>());
            }
            settings.party_angles.push_back(std::move(angles));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed setting table: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed setting table: angle is not a decimal string");
    }
    return settings;
}

StateVector state_from_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_array() || j.empty()) {
        throw ParseError("state must be a JSON array of [re, im] pairs");
    }
    std::vector<std::complex<double>> amplitudes;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("state amplitudes must be [re, im] pairs");
        }
        amplitudes.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    std::size_t qubits = 0;
    while ((std::size_t{1} << qubits) < amplitudes.size()) ++qubits;
    return make_state(qubits, std::move(amplitudes));
}

}  // namespace ctx
