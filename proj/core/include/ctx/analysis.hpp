#ifndef CTX_ANALYSIS_HPP
#define CTX_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ctx/errors.hpp"
#include "ctx/model.hpp"
#include "ctx/rational.hpp"

namespace ctx {

struct AnalysisOptions {
    /// Upper bound on the number of global assignments an incidence
    /// system may have. The desk-scale examples need at most a few dozen
    /// columns; the cap keeps accidental misuse diagnosable.
    std::uint64_t column_cap = std::uint64_t{1} << 20;
};

/// Raised when an operation that requires a no-signalling model is handed
/// an incompatible one. Carries the full compatibility report.
class IncompatibleModelError : public AnalysisError {
public:
    IncompatibleModelError(const std::string& what, CompatibilityReport report)
        : AnalysisError(what), report_(std::move(report)) {}

    const CompatibilityReport& report() const { return report_; }

private:
    CompatibilityReport report_;
};

/// The linear system whose nonnegative solutions are exactly the global
/// sections of a model: one row per (maximal context, assignment) pair,
/// one column per global assignment, entry 1 iff the global restricts to
/// the assignment, and the model weights as right-hand side.
struct IncidenceSystem {
    std::vector<std::pair<std::size_t, LocalAssignment>> rows;  // (context index, assignment)
    std::vector<GlobalAssignment> columns;
    std::vector<std::vector<std::uint8_t>> matrix;  // rows x columns, 0/1
    std::vector<Rational> rhs;
};

/// Deterministic row order (contexts in canonical order, assignments in
/// enumeration order) and column order (global enumeration order).
/// Throws AnalysisError when the scenario exceeds the column cap.
IncidenceSystem build_incidence(const EmpiricalModel& model, const AnalysisOptions& options = {});

/// Rational global-section search: returns a distribution d on the full
/// variable set with d|_C = e_C for every maximal context, or std::nullopt
/// when none exists (the model is probabilistically contextual). Decided
/// by exact phase-one simplex. Requires a compatible rational model;
/// throws IncompatibleModelError otherwise.
std::optional<RDistribution> probabilistic_global_section(const EmpiricalModel& model,
                                                          const AnalysisOptions& options = {});

/// Depth-first search over the variables in canonical order, pruning as
/// soon as a fully assigned maximal context falls outside its support.
/// `seed` may preassign outcomes (entries npos mean unassigned); visiting
/// stops when the callback returns false. Requires a boolean model.
void for_each_consistent_global(const EmpiricalModel& model,
                                const std::vector<std::size_t>& seed,
                                const std::function<bool(const GlobalAssignment&)>& visit);
inline constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

/// All global assignments consistent with every context's support, in
/// canonical enumeration order. Requires a boolean model.
std::vector<GlobalAssignment> consistent_globals(const EmpiricalModel& model);

/// First consistent global extending `seed`, if any.
std::optional<GlobalAssignment> first_consistent_global(const EmpiricalModel& model,
                                                        const std::vector<std::size_t>& seed = {});

/// Possibilistic-contextuality witness: the first supported local
/// assignment (contexts in canonical order, assignments in enumeration
/// order) that extends to no consistent global, or std::nullopt when every
/// supported assignment extends. Requires a boolean model.
std::optional<LocalAssignment> possibilistic_contextuality(const EmpiricalModel& model);

/// True iff no global assignment is consistent with the supports.
bool strong_contextuality(const EmpiricalModel& model);

/// Solves the incidence system over the rationals with signs unconstrained
/// ("negative probabilities"), returning the nonzero entries of the
/// particular solution with free variables set to zero, or std::nullopt if
/// the linear system is inconsistent. Requires a compatible rational
/// model; throws IncompatibleModelError otherwise.
std::optional<std::vector<std::pair<GlobalAssignment, Rational>>> signed_global_section(
    const EmpiricalModel& model, const AnalysisOptions& options = {});

/// Three-level classification with witnesses. The hierarchy
/// strong => possibilistic => probabilistic always holds.
struct ContextualityReport {
    bool probabilistically_contextual = false;
    bool possibilistically_contextual = false;
    bool strongly_contextual = false;
    /// Present exactly when not probabilistically contextual. Rational
    /// models carry a rational global section; boolean models carry the
    /// indicator of the consistent-global set.
    std::optional<RDistribution> global_section;
    /// Present exactly when possibilistically contextual.
    std::optional<LocalAssignment> witness_section;
    std::uint64_t consistent_global_count = 0;
};

/// Runs the three deciders and assembles the report. Rational models are
/// collapsed first for the possibilistic and strong levels; for boolean
/// models, which are their own collapse, the probabilistic level is the
/// possibilistic one. Throws IncompatibleModelError for incompatible
/// models.
ContextualityReport classify(const EmpiricalModel& model, const AnalysisOptions& options = {});

}  // namespace ctx

#endif
