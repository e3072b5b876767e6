#ifndef CTX_BUNDLE_HPP
#define CTX_BUNDLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctx/model.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

/// The bundle view of a rank-2 possibilistic model: the base graph has one
/// vertex per variable and one edge per (two-variable) maximal context;
/// above each vertex sits the fibre of its outcomes, and two fibre values
/// are joined exactly when the joint outcome is possible.
struct BundleDiagram {
    std::vector<std::string> base_vertices;                      // variable names
    std::vector<std::pair<std::size_t, std::size_t>> base_edges; // vertex index pairs, context order
    std::vector<std::vector<std::string>> fibres;                // outcome labels per variable
    /// Per base edge: possible (outcome index at first vertex, outcome
    /// index at second vertex) pairs, in cell order.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> bundle_edges;
};

/// Builds the diagram of a boolean model whose maximal contexts all have
/// exactly two variables. Throws BundleError otherwise.
BundleDiagram build_bundle(const EmpiricalModel& model);

/// A closed path through all fibres exactly once, i.e. a global assignment
/// all of whose restrictions are bundle edges. Returns the first such
/// assignment in search order, or std::nullopt. Throws BundleError when
/// the base graph is disconnected.
std::optional<GlobalAssignment> find_univocal_cycle(const BundleDiagram& diagram);

/// A univocal cycle through the given bundle edge, or std::nullopt.
/// Throws BundleError when the outcome pair is not a bundle edge.
std::optional<GlobalAssignment> extend_edge(const BundleDiagram& diagram, std::size_t base_edge,
                                            std::pair<std::size_t, std::size_t> outcome_pair);

/// Follows bundle edges around the base from a seeded value, requiring a
/// unique successor at every step, and ends by re-deriving a value for the
/// seed variable. Returns the visited (variable, outcome) sequence — the
/// final entry revisits the seed variable and may contradict the seed —
/// or std::nullopt when some step has no unique successor.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> follow_path(
    const BundleDiagram& diagram, std::size_t seed_variable, std::size_t seed_outcome);

struct HighlightEdge {
    std::size_t base_edge = 0;
    std::pair<std::size_t, std::size_t> outcomes;
};

/// Deterministic DOT rendering: one cluster per fibre (cluster_<var>,
/// value nodes "<var>_<outcome>"), the base cycle as a separate subgraph
/// (nodes "base_<var>"), and one edge per bundle edge. Highlighted edges
/// get penwidth=3. Byte-identical output for identical inputs. Throws
/// BundleError when a highlight references an unknown edge.
std::string emit_dot(const BundleDiagram& diagram, std::span<const HighlightEdge> highlights = {});

}  // namespace ctx

#endif
