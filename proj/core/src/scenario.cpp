#include "ctx/scenario.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "ctx/errors.hpp"

namespace ctx {

MeasurementScenario::MeasurementScenario(
    std::vector<std::string> variables,
    const std::vector<std::vector<std::string>>& contexts,
    const std::map<std::string, std::vector<std::string>>& outcomes)
    : variables_(std::move(variables)) {
    if (variables_.empty()) {
        throw ScenarioError("scenario has no variables");
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (!variable_index_.emplace(variables_[i], i).second) {
            throw ScenarioError("duplicate variable '" + variables_[i] + "'");
        }
    }

    outcomes_.resize(variables_.size());
    for (const auto& [name, labels] : outcomes) {
        const auto it = variable_index_.find(name);
        if (it == variable_index_.end()) {
            throw ScenarioError("outcomes given for unknown variable '" + name + "'");
        }
        outcomes_[it->second] = labels;
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (outcomes_[i].empty()) {
            throw ScenarioError("variable '" + variables_[i] + "' has no outcomes");
        }
        std::set<std::string> seen(outcomes_[i].begin(), outcomes_[i].end());
        if (seen.size() != outcomes_[i].size()) {
            throw ScenarioError("variable '" + variables_[i] + "' has duplicate outcome labels");
        }
    }

    std::vector<std::vector<std::size_t>> raw;
    raw.reserve(contexts.size());
    for (const auto& names : contexts) {
        if (names.empty()) {
            throw ScenarioError("empty context");
        }
        std::vector<std::size_t> indices;
        indices.reserve(names.size());
        for (const auto& name : names) {
            indices.push_back(variable_index(name));
        }
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        raw.push_back(std::move(indices));
    }
    if (raw.empty()) {
        throw ScenarioError("scenario has no contexts");
    }

    // Keep only maximal contexts: the family is an antichain, with the
    // downward closure implicit.
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (i == j) continue;
            if (raw[i] == raw[j] && i > j) {
                maximal = false;  // duplicate, keep the first copy
                break;
            }
            if (raw[i] != raw[j] && context_subset(raw[i], raw[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            contexts_.push_back(raw[i]);
        } else {
            removed_redundant_contexts_ = true;
        }
    }
    std::sort(contexts_.begin(), contexts_.end());

    std::vector<bool> covered(variables_.size(), false);
    for (const auto& context : contexts_) {
        for (std::size_t v : context) covered[v] = true;
    }
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (!covered[v]) {
            throw ScenarioError("variable '" + variables_[v] + "' occurs in no context");
        }
    }
}

std::size_t MeasurementScenario::variable_index(std::string_view name) const {
    const auto it = variable_index_.find(name);
    if (it == variable_index_.end()) {
        throw ScenarioError("unknown variable '" + std::string(name) + "'");
    }
    return it->second;
}

bool MeasurementScenario::has_variable(std::string_view name) const {
    return variable_index_.find(name) != variable_index_.end();
}

std::size_t MeasurementScenario::context_index(std::span<const std::size_t> context) const {
    for (std::size_t i = 0; i < contexts_.size(); ++i) {
        if (std::ranges::equal(contexts_[i], context)) return i;
    }
    return npos;
}

const std::vector<std::string>& MeasurementScenario::outcomes(std::size_t variable) const {
    if (variable >= variables_.size()) {
        throw ScenarioError("variable index out of range");
    }
    return outcomes_[variable];
}

std::vector<std::size_t> MeasurementScenario::context_from_names(
    std::span<const std::string> names) const {
    std::vector<std::size_t> indices;
    indices.reserve(names.size());
    for (const auto& name : names) {
        indices.push_back(variable_index(name));
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

std::string MeasurementScenario::context_label(std::span<const std::size_t> context) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < context.size(); ++i) {
        if (i > 0) out << ',';
        if (context[i] >= variables_.size()) {
            throw ScenarioError("variable index out of range");
        }
        out << variables_[context[i]];
    }
    return out.str();
}

std::string MeasurementScenario::assignment_label(const LocalAssignment& assignment) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < assignment.context.size(); ++i) {
        if (i > 0) out << ',';
        out << outcomes(assignment.context[i]).at(assignment.outcomes[i]);
    }
    return out.str();
}

std::uint64_t MeasurementScenario::assignment_count(std::span<const std::size_t> context) const {
    std::uint64_t count = 1;
    for (std::size_t v : context) {
        const std::uint64_t size = outcomes(v).size();
        if (count > std::numeric_limits<std::uint64_t>::max() / size) {
            throw ScenarioError("assignment space too large to count");
        }
        count *= size;
    }
    return count;
}

std::uint64_t MeasurementScenario::global_count() const {
    std::vector<std::size_t> all(variables_.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return assignment_count(all);
}

LocalAssignment MeasurementScenario::nth_assignment(std::span<const std::size_t> context,
                                                    std::uint64_t index) const {
    LocalAssignment assignment;
    assignment.context.assign(context.begin(), context.end());
    assignment.outcomes.resize(context.size());
    for (std::size_t i = 0; i < context.size(); ++i) {
        const std::uint64_t size = outcomes(context[i]).size();
        assignment.outcomes[i] = static_cast<std::size_t>(index % size);
        index /= size;
    }
    if (index != 0) {
        throw ScenarioError("assignment index out of range");
    }
    return assignment;
}

GlobalAssignment MeasurementScenario::nth_global(std::uint64_t index) const {
    GlobalAssignment global;
    global.outcomes.resize(variables_.size());
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        const std::uint64_t size = outcomes_[v].size();
        global.outcomes[v] = static_cast<std::size_t>(index % size);
        index /= size;
    }
    if (index != 0) {
        throw ScenarioError("global assignment index out of range");
    }
    return global;
}

std::uint64_t MeasurementScenario::rank_of_global(const GlobalAssignment& global) const {
    if (global.outcomes.size() != variables_.size()) {
        throw ScenarioError("global assignment has wrong arity");
    }
    std::uint64_t rank = 0;
    std::uint64_t stride = 1;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        rank += stride * global.outcomes[v];
        stride *= outcomes_[v].size();
    }
    return rank;
}

std::vector<LocalAssignment> enumerate_assignments(const MeasurementScenario& scenario,
                                                   std::span<const std::size_t> context) {
    const std::uint64_t count = scenario.assignment_count(context);
    std::vector<LocalAssignment> assignments;
    assignments.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        assignments.push_back(scenario.nth_assignment(context, i));
    }
    return assignments;
}

LocalAssignment restrict_assignment(const LocalAssignment& assignment,
                                    std::span<const std::size_t> subcontext) {
    LocalAssignment result;
    result.context.assign(subcontext.begin(), subcontext.end());
    result.outcomes.reserve(subcontext.size());
    for (std::size_t v : subcontext) {
        const auto it = std::ranges::lower_bound(assignment.context, v);
        if (it == assignment.context.end() || *it != v) {
            throw ScenarioError("restriction target is not contained in the assignment's context");
        }
        result.outcomes.push_back(
            assignment.outcomes[static_cast<std::size_t>(it - assignment.context.begin())]);
    }
    return result;
}

LocalAssignment restrict_global(const GlobalAssignment& global,
                                std::span<const std::size_t> context) {
    LocalAssignment result;
    result.context.assign(context.begin(), context.end());
    result.outcomes.reserve(context.size());
    for (std::size_t v : context) {
        if (v >= global.outcomes.size()) {
            throw ScenarioError("variable index out of range");
        }
        result.outcomes.push_back(global.outcomes[v]);
    }
    return result;
}

std::vector<std::size_t> context_overlap(std::span<const std::size_t> a,
                                         std::span<const std::size_t> b) {
    std::vector<std::size_t> overlap;
    std::ranges::set_intersection(a, b, std::back_inserter(overlap));
    return overlap;
}

bool context_subset(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    return std::ranges::includes(b, a);
}

}  // namespace ctx
