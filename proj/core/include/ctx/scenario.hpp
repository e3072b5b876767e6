#ifndef CTX_SCENARIO_HPP
#define CTX_SCENARIO_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctx {

/// An assignment of outcomes to the variables of one context.
/// `context` holds variable indices, strictly increasing; `outcomes[i]`
/// indexes into the outcome list of variable `context[i]`.
struct LocalAssignment {
    std::vector<std::size_t> context;
    std::vector<std::size_t> outcomes;

    auto operator<=>(const LocalAssignment&) const = default;
};

/// An assignment of one outcome to every variable of a scenario.
struct GlobalAssignment {
    std::vector<std::size_t> outcomes;

    auto operator<=>(const GlobalAssignment&) const = default;
};

/// A measurement scenario: an ordered variable set, the family of maximal
/// measurement contexts (an antichain of variable subsets), and a finite
/// ordered outcome set per variable. Immutable after construction and
/// safe to share across threads; every operation on it is a pure function.
class MeasurementScenario {
public:
    /// Validates and canonicalizes. Context members are sorted by variable
    /// order, contexts that are subsets of other contexts are dropped (the
    /// `removed_redundant_contexts` flag records that this happened), and
    /// the surviving contexts are sorted lexicographically.
    ///
    /// Throws ScenarioError on: empty variable set, duplicate variable,
    /// empty context, context naming an unknown variable, a variable with
    /// no outcomes, or a variable that occurs in no context.
    MeasurementScenario(std::vector<std::string> variables,
                        const std::vector<std::vector<std::string>>& contexts,
                        const std::map<std::string, std::vector<std::string>>& outcomes);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t variable_count() const { return variables_.size(); }

    /// Index of a variable name; throws ScenarioError if unknown.
    std::size_t variable_index(std::string_view name) const;
    bool has_variable(std::string_view name) const;

    /// Maximal contexts in canonical order, each a sorted index list.
    const std::vector<std::vector<std::size_t>>& contexts() const { return contexts_; }

    /// Position of `context` in contexts(), or npos when not maximal.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t context_index(std::span<const std::size_t> context) const;

    const std::vector<std::string>& outcomes(std::size_t variable) const;

    bool removed_redundant_contexts() const { return removed_redundant_contexts_; }

    /// Translates a list of variable names into a sorted index context.
    std::vector<std::size_t> context_from_names(std::span<const std::string> names) const;

    /// "a1,b1" for a context; "0,1" for an assignment over it.
    std::string context_label(std::span<const std::size_t> context) const;
    std::string assignment_label(const LocalAssignment& assignment) const;

    std::uint64_t assignment_count(std::span<const std::size_t> context) const;
    std::uint64_t global_count() const;

    /// The i-th assignment over `context` in canonical enumeration order.
    /// The first listed variable varies fastest, matching the column order
    /// of the standard two-party tables.
    LocalAssignment nth_assignment(std::span<const std::size_t> context, std::uint64_t index) const;
    GlobalAssignment nth_global(std::uint64_t index) const;
    std::uint64_t rank_of_global(const GlobalAssignment& global) const;

    bool operator==(const MeasurementScenario&) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<std::vector<std::size_t>> contexts_;
    std::vector<std::vector<std::string>> outcomes_;
    std::map<std::string, std::size_t, std::less<>> variable_index_;
    bool removed_redundant_contexts_ = false;
};

/// All assignments over `context` in canonical enumeration order.
std::vector<LocalAssignment> enumerate_assignments(const MeasurementScenario& scenario,
                                                   std::span<const std::size_t> context);

/// Function restriction: cuts the assignment down to `subcontext`.
/// Throws ScenarioError if `subcontext` is not contained in the domain.
LocalAssignment restrict_assignment(const LocalAssignment& assignment,
                                    std::span<const std::size_t> subcontext);

/// Restriction of a global assignment to a context.
LocalAssignment restrict_global(const GlobalAssignment& global,
                                std::span<const std::size_t> context);

/// Intersection of two contexts (sorted index lists).
std::vector<std::size_t> context_overlap(std::span<const std::size_t> a,
                                         std::span<const std::size_t> b);

/// True when `a` is a subset of `b` (both sorted).
bool context_subset(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace ctx

#endif
