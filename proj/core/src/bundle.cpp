#include "ctx/bundle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctx/analysis.hpp"
#include "ctx/errors.hpp"

namespace ctx {

namespace {

/// The boolean model a diagram encodes; the searches reuse the analysis
/// backtracker on it rather than reimplementing the walk.
EmpiricalModel diagram_model(const BundleDiagram& diagram) {
    std::map<std::string, std::vector<std::string>> outcomes;
    for (std::size_t v = 0; v < diagram.base_vertices.size(); ++v) {
        outcomes[diagram.base_vertices[v]] = diagram.fibres[v];
    }
    std::vector<std::vector<std::string>> contexts;
    for (const auto& [u, v] : diagram.base_edges) {
        contexts.push_back({diagram.base_vertices[u], diagram.base_vertices[v]});
    }
    MeasurementScenario scenario(diagram.base_vertices, contexts, outcomes);

    std::map<std::vector<std::size_t>, RDistribution> tables;
    for (std::size_t e = 0; e < diagram.base_edges.size(); ++e) {
        const auto [u, v] = diagram.base_edges[e];
        const std::vector<std::size_t> context =
            scenario.context_from_names(std::vector<std::string>{
                diagram.base_vertices[u], diagram.base_vertices[v]});
        // u < v by construction, so context order matches the pair order.
        RDistribution::WeightMap weights;
        for (const auto& [ou, ov] : diagram.bundle_edges[e]) {
            weights.emplace(std::vector<std::size_t>{ou, ov}, Rational(1));
        }
        tables.emplace(context, RDistribution(Semiring::Boolean, context, std::move(weights)));
    }
    return EmpiricalModel::from_tables(std::move(scenario), Semiring::Boolean, tables);
}

void require_connected(const BundleDiagram& diagram) {
    const std::size_t n = diagram.base_vertices.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t current = queue.back();
        queue.pop_back();
        for (const auto& [u, v] : diagram.base_edges) {
            const std::size_t other = u == current ? v : (v == current ? u : current);
            if (other != current && !seen[other]) {
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    if (!std::ranges::all_of(seen, [](bool b) { return b; })) {
        throw BundleError("bundle base graph is disconnected");
    }
}

}  // namespace

BundleDiagram build_bundle(const EmpiricalModel& model) {
    if (model.semiring() != Semiring::Boolean) {
        throw BundleError("bundle view requires a boolean model; collapse the model first");
    }
    const auto& scenario = model.scenario();
    BundleDiagram diagram;
    diagram.base_vertices = scenario.variables();
    for (std::size_t v = 0; v < scenario.variable_count(); ++v) {
        diagram.fibres.push_back(scenario.outcomes(v));
    }
    for (std::size_t i = 0; i < scenario.contexts().size(); ++i) {
        const auto& context = scenario.contexts()[i];
        if (context.size() != 2) {
            throw BundleError("bundle view requires rank-2 scenarios; context '" +
                              scenario.context_label(context) + "' has " +
                              std::to_string(context.size()) + " variables");
        }
        diagram.base_edges.emplace_back(context[0], context[1]);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& [outcomes, weight] : model.table(i).weights()) {
            edges.emplace_back(outcomes[0], outcomes[1]);
        }
        diagram.bundle_edges.push_back(std::move(edges));
    }
    return diagram;
}

std::optional<GlobalAssignment> find_univocal_cycle(const BundleDiagram& diagram) {
    require_connected(diagram);
    return first_consistent_global(diagram_model(diagram));
}

std::optional<GlobalAssignment> extend_edge(const BundleDiagram& diagram, std::size_t base_edge,
                                            std::pair<std::size_t, std::size_t> outcome_pair) {
    if (base_edge >= diagram.base_edges.size() ||
        !std::ranges::any_of(diagram.bundle_edges[base_edge],
                             [&](const auto& edge) { return edge == outcome_pair; })) {
        throw BundleError("outcome pair is not a bundle edge");
    }
    const EmpiricalModel model = diagram_model(diagram);
    std::vector<std::size_t> seed(diagram.base_vertices.size(), unassigned);
    seed[diagram.base_edges[base_edge].first] = outcome_pair.first;
    seed[diagram.base_edges[base_edge].second] = outcome_pair.second;
    return first_consistent_global(model, seed);
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> follow_path(
    const BundleDiagram& diagram, std::size_t seed_variable, std::size_t seed_outcome) {
    const std::size_t n = diagram.base_vertices.size();
    if (seed_variable >= n || seed_outcome >= diagram.fibres[seed_variable].size()) {
        throw BundleError("seed is not a fibre value");
    }
    std::vector<std::pair<std::size_t, std::size_t>> trace{{seed_variable, seed_outcome}};
    std::set<std::size_t> visited{seed_variable};
    std::size_t current = seed_variable;
    std::size_t value = seed_outcome;

    for (std::size_t step = 0; step < n; ++step) {
        const bool closing = step + 1 == n;
        // First base edge (in context order) leaving the current variable
        // towards an unvisited vertex, or back to the seed on the last step.
        std::size_t chosen = diagram.base_edges.size();
        std::size_t next = n;
        for (std::size_t e = 0; e < diagram.base_edges.size(); ++e) {
            const auto [u, v] = diagram.base_edges[e];
            if (u != current && v != current) continue;
            const std::size_t other = u == current ? v : u;
            if (closing ? other == seed_variable : !visited.contains(other)) {
                chosen = e;
                next = other;
                break;
            }
        }
        if (chosen == diagram.base_edges.size()) {
            return std::nullopt;  // stuck: base is not a single cycle
        }
        // A unique successor value is required for deterministic propagation.
        std::vector<std::size_t> successors;
        for (const auto& [ou, ov] : diagram.bundle_edges[chosen]) {
            const std::size_t here = diagram.base_edges[chosen].first == current ? ou : ov;
            const std::size_t there = diagram.base_edges[chosen].first == current ? ov : ou;
            if (here == value) successors.push_back(there);
        }
        if (successors.size() != 1) {
            return std::nullopt;
        }
        current = next;
        value = successors.front();
        visited.insert(current);
        trace.emplace_back(current, value);
    }
    return trace;
}

std::string emit_dot(const BundleDiagram& diagram, std::span<const HighlightEdge> highlights) {
    std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> highlighted;
    for (const auto& highlight : highlights) {
        if (highlight.base_edge >= diagram.base_edges.size() ||
            !std::ranges::any_of(diagram.bundle_edges[highlight.base_edge],
                                 [&](const auto& edge) { return edge == highlight.outcomes; })) {
            throw BundleError("highlight references an unknown bundle edge");
        }
        highlighted.emplace(highlight.base_edge, highlight.outcomes);
    }

    std::ostringstream out;
    out << "graph bundle {\n";
    for (std::size_t v = 0; v < diagram.base_vertices.size(); ++v) {
        out << "  subgraph \"cluster_" << diagram.base_vertices[v] << "\" {\n";
        out << "    label=\"" << diagram.base_vertices[v] << "\";\n";
        for (const auto& outcome : diagram.fibres[v]) {
            out << "    \"" << diagram.base_vertices[v] << '_' << outcome << "\" [label=\""
                << outcome << "\"];\n";
        }
        out << "  }\n";
    }
    out << "  subgraph base {\n";
    for (const auto& vertex : diagram.base_vertices) {
        out << "    \"base_" << vertex << "\" [label=\"" << vertex << "\", shape=box];\n";
    }
    for (const auto& [u, v] : diagram.base_edges) {
        out << "    \"base_" << diagram.base_vertices[u] << "\" -- \"base_"
            << diagram.base_vertices[v] << "\";\n";
    }
    out << "  }\n";
    for (std::size_t e = 0; e < diagram.base_edges.size(); ++e) {
        const auto [u, v] = diagram.base_edges[e];
        for (const auto& pair : diagram.bundle_edges[e]) {
            out << "  \"" << diagram.base_vertices[u] << '_' << diagram.fibres[u][pair.first]
                << "\" -- \"" << diagram.base_vertices[v] << '_'
                << diagram.fibres[v][pair.second] << '"';
            if (highlighted.contains({e, pair})) {
                out << " [penwidth=3]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace ctx
