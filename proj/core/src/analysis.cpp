#include "ctx/analysis.hpp"

#include <algorithm>
#include <set>

#include "ctx/linear.hpp"
#include "ctx/simplex.hpp"

namespace ctx {

namespace {

void require_boolean(const EmpiricalModel& model, const char* operation) {
    if (model.semiring() != Semiring::Boolean) {
        throw AnalysisError(std::string(operation) +
                            " requires a boolean model; collapse the model first");
    }
}

void require_compatible_rational(const EmpiricalModel& model, const char* operation) {
    if (model.semiring() != Semiring::NonnegRational) {
        throw AnalysisError(std::string(operation) + " requires a rational model");
    }
    CompatibilityReport report = check_compatibility(model);
    if (!report.compatible) {
        throw IncompatibleModelError(std::string(operation) + " requires a compatible model",
                                     std::move(report));
    }
}

}  // namespace

IncidenceSystem build_incidence(const EmpiricalModel& model, const AnalysisOptions& options) {
    const auto& scenario = model.scenario();
    const std::uint64_t column_count = scenario.global_count();
    if (column_count > options.column_cap) {
        throw AnalysisError("incidence system needs " + std::to_string(column_count) +
                            " columns, above the cap of " + std::to_string(options.column_cap));
    }

    IncidenceSystem system;
    system.columns.reserve(column_count);
    for (std::uint64_t g = 0; g < column_count; ++g) {
        system.columns.push_back(scenario.nth_global(g));
    }
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        const auto& context = scenario.contexts()[i];
        for (auto& assignment : enumerate_assignments(scenario, context)) {
            std::vector<std::uint8_t> row(system.columns.size(), 0);
            for (std::size_t col = 0; col < system.columns.size(); ++col) {
                row[col] = restrict_global(system.columns[col], context).outcomes ==
                                   assignment.outcomes
                               ? 1
                               : 0;
            }
            system.rhs.push_back(model.table(i).weight(assignment.outcomes));
            system.rows.emplace_back(i, std::move(assignment));
            system.matrix.push_back(std::move(row));
        }
    }
    return system;
}

std::optional<RDistribution> probabilistic_global_section(const EmpiricalModel& model,
                                                          const AnalysisOptions& options) {
    require_compatible_rational(model, "probabilistic global-section search");
    const IncidenceSystem system = build_incidence(model, options);

    Matrix a(system.matrix.size());
    for (std::size_t r = 0; r < system.matrix.size(); ++r) {
        a[r].assign(system.matrix[r].begin(), system.matrix[r].end());
    }
    const auto solution = feasible_point(a, system.rhs);
    if (!solution) {
        return std::nullopt;
    }

    RDistribution::WeightMap weights;
    for (std::size_t col = 0; col < solution->size(); ++col) {
        if ((*solution)[col] != 0) {
            weights.emplace(system.columns[col].outcomes, (*solution)[col]);
        }
    }
    std::vector<std::size_t> full_context(model.scenario().variable_count());
    for (std::size_t v = 0; v < full_context.size(); ++v) full_context[v] = v;
    return RDistribution(Semiring::NonnegRational, std::move(full_context), std::move(weights));
}

void for_each_consistent_global(const EmpiricalModel& model, const std::vector<std::size_t>& seed,
                                const std::function<bool(const GlobalAssignment&)>& visit) {
    require_boolean(model, "consistent-global search");
    const auto& scenario = model.scenario();
    const std::size_t var_count = scenario.variable_count();
    if (!seed.empty() && seed.size() != var_count) {
        throw AnalysisError("seed assignment has wrong arity");
    }

    // Contexts become checkable once their largest variable is assigned.
    std::vector<std::vector<std::size_t>> completed_at(var_count);
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        completed_at[scenario.contexts()[i].back()].push_back(i);
    }

    std::vector<std::size_t> outcomes(var_count, 0);
    bool stop = false;

    auto recurse = [&](auto&& self, std::size_t var) -> void {
        if (stop) return;
        if (var == var_count) {
            stop = !visit(GlobalAssignment{outcomes});
            return;
        }
        const bool seeded = !seed.empty() && seed[var] != unassigned;
        const std::size_t outcome_count = scenario.outcomes(var).size();
        for (std::size_t o = 0; o < outcome_count && !stop; ++o) {
            if (seeded && o != seed[var]) continue;
            outcomes[var] = o;
            bool viable = true;
            for (std::size_t i : completed_at[var]) {
                const auto& context = scenario.contexts()[i];
                std::vector<std::size_t> key;
                key.reserve(context.size());
                for (std::size_t v : context) key.push_back(outcomes[v]);
                if (model.table(i).weight(key) == 0) {
                    viable = false;
                    break;
                }
            }
            if (viable) {
                self(self, var + 1);
            }
        }
    };
    recurse(recurse, 0);
}

std::vector<GlobalAssignment> consistent_globals(const EmpiricalModel& model) {
    std::vector<GlobalAssignment> globals;
    for_each_consistent_global(model, {}, [&](const GlobalAssignment& g) {
        globals.push_back(g);
        return true;
    });
    const auto& scenario = model.scenario();
    std::ranges::sort(globals, [&](const GlobalAssignment& a, const GlobalAssignment& b) {
        return scenario.rank_of_global(a) < scenario.rank_of_global(b);
    });
    return globals;
}

std::optional<GlobalAssignment> first_consistent_global(const EmpiricalModel& model,
                                                        const std::vector<std::size_t>& seed) {
    std::optional<GlobalAssignment> found;
    for_each_consistent_global(model, seed, [&](const GlobalAssignment& g) {
        found = g;
        return false;
    });
    return found;
}

std::optional<LocalAssignment> possibilistic_contextuality(const EmpiricalModel& model) {
    require_boolean(model, "possibilistic-contextuality check");
    const auto& scenario = model.scenario();

    // Projections of the consistent globals onto each maximal context.
    std::vector<std::set<std::vector<std::size_t>>> covered(scenario.contexts().size());
    for_each_consistent_global(model, {}, [&](const GlobalAssignment& g) {
        for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
            covered[i].insert(restrict_global(g, scenario.contexts()[i]).outcomes);
        }
        return true;
    });

    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        for (const auto& assignment : enumerate_assignments(scenario, scenario.contexts()[i])) {
            if (model.table(i).weight(assignment.outcomes) == 0) continue;
            if (!covered[i].contains(assignment.outcomes)) {
                return assignment;
            }
        }
    }
    return std::nullopt;
}

bool strong_contextuality(const EmpiricalModel& model) {
    require_boolean(model, "strong-contextuality check");
    return !first_consistent_global(model).has_value();
}

std::optional<std::vector<std::pair<GlobalAssignment, Rational>>> signed_global_section(
    const EmpiricalModel& model, const AnalysisOptions& options) {
    require_compatible_rational(model, "signed global-section search");
    const IncidenceSystem system = build_incidence(model, options);

    Matrix a(system.matrix.size());
    for (std::size_t r = 0; r < system.matrix.size(); ++r) {
        a[r].assign(system.matrix[r].begin(), system.matrix[r].end());
    }
    const auto solution = solve_linear(std::move(a), system.rhs);
    if (!solution) {
        return std::nullopt;
    }
    std::vector<std::pair<GlobalAssignment, Rational>> entries;
    for (std::size_t col = 0; col < solution->size(); ++col) {
        if ((*solution)[col] != 0) {
            entries.emplace_back(system.columns[col], (*solution)[col]);
        }
    }
    return entries;
}

ContextualityReport classify(const EmpiricalModel& model, const AnalysisOptions& options) {
    ContextualityReport report;

    if (model.semiring() == Semiring::NonnegRational) {
        auto section = probabilistic_global_section(model, options);
        report.probabilistically_contextual = !section.has_value();
        report.global_section = std::move(section);

        const EmpiricalModel collapse = possibilistic_collapse(model);
        report.witness_section = possibilistic_contextuality(collapse);
        report.possibilistically_contextual = report.witness_section.has_value();
        const auto globals = consistent_globals(collapse);
        report.consistent_global_count = globals.size();
        report.strongly_contextual = globals.empty();
    } else {
        CompatibilityReport compatibility = check_compatibility(model);
        if (!compatibility.compatible) {
            throw IncompatibleModelError("classification requires a compatible model",
                                         std::move(compatibility));
        }
        report.witness_section = possibilistic_contextuality(model);
        report.possibilistically_contextual = report.witness_section.has_value();
        // A boolean model is its own collapse: there is no finer
        // probabilistic level to decide.
        report.probabilistically_contextual = report.possibilistically_contextual;
        const auto globals = consistent_globals(model);
        report.consistent_global_count = globals.size();
        report.strongly_contextual = globals.empty();
        if (!report.probabilistically_contextual) {
            RDistribution::WeightMap weights;
            for (const auto& g : globals) {
                weights.emplace(g.outcomes, Rational(1));
            }
            std::vector<std::size_t> full_context(model.scenario().variable_count());
            for (std::size_t v = 0; v < full_context.size(); ++v) full_context[v] = v;
            report.global_section =
                RDistribution(Semiring::Boolean, std::move(full_context), std::move(weights));
        }
    }

    if ((report.strongly_contextual && !report.possibilistically_contextual) ||
        (report.possibilistically_contextual && !report.probabilistically_contextual)) {
        throw AnalysisError("contextuality hierarchy violated; this is a bug");
    }
    return report;
}

}  // namespace ctx
