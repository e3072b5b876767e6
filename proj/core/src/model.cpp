#include "ctx/model.hpp"

#include <algorithm>
#include <set>

#include "ctx/errors.hpp"

namespace ctx {

EmpiricalModel::EmpiricalModel(MeasurementScenario scenario, Semiring semiring,
                               std::vector<RDistribution> tables)
    : scenario_(std::move(scenario)), semiring_(semiring), tables_(std::move(tables)) {
    if (tables_.size() != scenario_.contexts().size()) {
        throw ModelError("model needs exactly one table per maximal context");
    }
    for (std::size_t i = 0; i < tables_.size(); ++i) {
        if (tables_[i].context() != scenario_.contexts()[i]) {
            throw ModelError("table context does not match maximal context '" +
                             scenario_.context_label(scenario_.contexts()[i]) + "'");
        }
        if (tables_[i].semiring() != semiring_) {
            throw ModelError("table semiring does not match the model semiring");
        }
    }
}

EmpiricalModel EmpiricalModel::from_tables(
    MeasurementScenario scenario, Semiring semiring,
    const std::map<std::vector<std::size_t>, RDistribution>& tables) {
    std::vector<RDistribution> aligned;
    aligned.reserve(scenario.contexts().size());
    for (const auto& context : scenario.contexts()) {
        const auto it = tables.find(context);
        if (it == tables.end()) {
            throw ModelError("missing table for context '" + scenario.context_label(context) +
                             "'");
        }
        aligned.push_back(it->second);
    }
    if (tables.size() != scenario.contexts().size()) {
        throw ModelError("model has a table for a non-maximal context");
    }
    return EmpiricalModel(std::move(scenario), semiring, std::move(aligned));
}

const RDistribution& EmpiricalModel::table(std::size_t context_index) const {
    return tables_.at(context_index);
}

CompatibilityReport check_compatibility(const EmpiricalModel& model) {
    CompatibilityReport report;
    const auto& contexts = model.scenario().contexts();
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        for (std::size_t j = i + 1; j < contexts.size(); ++j) {
            const auto overlap = context_overlap(contexts[i], contexts[j]);
            RDistribution from_i = marginalize(model.table(i), overlap);
            RDistribution from_j = marginalize(model.table(j), overlap);
            if (from_i != from_j) {
                report.violations.push_back(
                    {i, j, overlap, std::move(from_i), std::move(from_j)});
            }
        }
    }
    report.compatible = report.violations.empty();
    return report;
}

EmpiricalModel possibilistic_collapse(const EmpiricalModel& model) {
    if (model.semiring() == Semiring::Boolean) {
        throw ModelError("possibilistic collapse of a model that is already boolean");
    }
    std::vector<RDistribution> tables;
    tables.reserve(model.tables().size());
    for (const auto& table : model.tables()) {
        tables.push_back(support(table));
    }
    return EmpiricalModel(model.scenario(), Semiring::Boolean, std::move(tables));
}

EmpiricalModel from_global(const MeasurementScenario& scenario, const RDistribution& global) {
    if (global.context().size() != scenario.variable_count()) {
        throw ModelError("global distribution must cover the full variable set");
    }
    std::vector<RDistribution> tables;
    tables.reserve(scenario.contexts().size());
    for (const auto& context : scenario.contexts()) {
        tables.push_back(marginalize(global, context));
    }
    return EmpiricalModel(scenario, global.semiring(), std::move(tables));
}

std::vector<ModelIssue> validate(const EmpiricalModel& model) {
    std::vector<ModelIssue> issues;
    const auto& scenario = model.scenario();
    for (std::size_t i = 0; i < model.tables().size(); ++i) {
        const auto& table = model.table(i);
        const std::string label = scenario.context_label(table.context());
        for (const auto& [outcomes, weight] : table.weights()) {
            for (std::size_t p = 0; p < outcomes.size(); ++p) {
                if (outcomes[p] >= scenario.outcomes(table.context()[p]).size()) {
                    issues.push_back({label, "assignment outcome out of range"});
                }
            }
            if (model.semiring() == Semiring::NonnegRational) {
                if (weight < 0) {
                    issues.push_back({label, "negative weight " + to_string(weight) + " at '" +
                                                 scenario.assignment_label(
                                                     {table.context(),
                                                      outcomes}) +
                                                 "'"});
                }
            } else if (weight != 1) {
                issues.push_back({label, "boolean weight must be 0 or 1, got " +
                                             to_string(weight)});
            }
        }
        if (model.semiring() == Semiring::NonnegRational) {
            Rational sum(0);
            for (const auto& [outcomes, weight] : table.weights()) sum += weight;
            if (sum != 1) {
                issues.push_back({label, "weights sum to " + to_string(sum) + ", expected 1"});
            }
        } else if (table.weights().empty()) {
            issues.push_back({label, "boolean table has empty support"});
        }
    }
    return issues;
}

EmpiricalModel as_rational(const EmpiricalModel& model) {
    if (model.semiring() == Semiring::NonnegRational) {
        return model;
    }
    std::vector<RDistribution> tables;
    tables.reserve(model.tables().size());
    for (const auto& table : model.tables()) {
        tables.emplace_back(Semiring::NonnegRational, table.context(),
                            RDistribution::WeightMap(table.weights()));
    }
    return EmpiricalModel(model.scenario(), Semiring::NonnegRational, std::move(tables));
}

EmpiricalModel rename_variables(const EmpiricalModel& model,
                                const std::map<std::string, std::string>& renaming) {
    const auto& scenario = model.scenario();
    const auto rename = [&](const std::string& name) -> const std::string& {
        const auto it = renaming.find(name);
        return it == renaming.end() ? name : it->second;
    };

    std::vector<std::string> variables;
    variables.reserve(scenario.variable_count());
    std::map<std::string, std::vector<std::string>> outcomes;
    for (std::size_t v = 0; v < scenario.variable_count(); ++v) {
        variables.push_back(rename(scenario.variables()[v]));
        outcomes[variables.back()] = scenario.outcomes(v);
    }
    if (std::set<std::string>(variables.begin(), variables.end()).size() != variables.size()) {
        throw ModelError("variable renaming is not a bijection");
    }

    std::vector<std::vector<std::string>> contexts;
    for (const auto& context : scenario.contexts()) {
        std::vector<std::string> names;
        for (std::size_t v : context) names.push_back(variables[v]);
        contexts.push_back(std::move(names));
    }
    MeasurementScenario renamed(variables, contexts, outcomes);

    std::map<std::vector<std::size_t>, RDistribution> tables;
    for (const auto& table : model.tables()) {
        // Old context positions in the order the renamed context sorts them.
        std::vector<std::size_t> new_context;
        for (std::size_t v : table.context()) {
            new_context.push_back(renamed.variable_index(variables[v]));
        }
        std::vector<std::size_t> order(new_context.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return new_context[a] < new_context[b]; });

        std::vector<std::size_t> sorted_context;
        for (std::size_t i : order) sorted_context.push_back(new_context[i]);
        RDistribution::WeightMap weights;
        for (const auto& [old_outcomes, weight] : table.weights()) {
            std::vector<std::size_t> reordered;
            reordered.reserve(order.size());
            for (std::size_t i : order) reordered.push_back(old_outcomes[i]);
            weights.emplace(std::move(reordered), weight);
        }
        tables.emplace(sorted_context,
                       RDistribution(model.semiring(), sorted_context, std::move(weights)));
    }
    return EmpiricalModel::from_tables(std::move(renamed), model.semiring(), tables);
}

}  // namespace ctx
