#ifndef CTX_MODEL_HPP
#define CTX_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "ctx/distribution.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

/// An empirical model: one distribution per maximal context of a scenario.
/// Construction enforces the structural invariants (exactly one table per
/// maximal context, matching contexts, a single shared semiring). The data
/// invariants — normalization, nonnegativity, non-empty boolean supports —
/// are checked separately by `validate`, and no-signalling compatibility
/// by `check_compatibility`; both are properties of the data, not of the
/// representation.
class EmpiricalModel {
public:
    /// `tables` must be aligned with scenario.contexts().
    EmpiricalModel(MeasurementScenario scenario, Semiring semiring,
                   std::vector<RDistribution> tables);

    /// Convenience constructor from a context-keyed map.
    static EmpiricalModel from_tables(MeasurementScenario scenario, Semiring semiring,
                                      const std::map<std::vector<std::size_t>, RDistribution>& tables);

    const MeasurementScenario& scenario() const { return scenario_; }
    Semiring semiring() const { return semiring_; }
    const std::vector<RDistribution>& tables() const { return tables_; }
    const RDistribution& table(std::size_t context_index) const;

    bool operator==(const EmpiricalModel&) const = default;

private:
    MeasurementScenario scenario_;
    Semiring semiring_;
    std::vector<RDistribution> tables_;
};

struct CompatibilityViolation {
    std::size_t context_a;
    std::size_t context_b;
    std::vector<std::size_t> overlap;
    RDistribution marginal_a;
    RDistribution marginal_b;
};

struct CompatibilityReport {
    bool compatible = true;
    std::vector<CompatibilityViolation> violations;
};

/// No-signalling check: for every unordered pair of maximal contexts the
/// two marginals on the overlap must be exactly equal. All failing pairs
/// are reported, sorted by context pair.
CompatibilityReport check_compatibility(const EmpiricalModel& model);

/// Applies the support homomorphism to every table, turning a rational
/// model into its possibility table. Throws ModelError on boolean input.
EmpiricalModel possibilistic_collapse(const EmpiricalModel& model);

/// The model whose table for each maximal context C is the marginal of
/// `global` on C. By construction the result is compatible and has the
/// given distribution as a global section. `global` must be a distribution
/// over the full variable set.
EmpiricalModel from_global(const MeasurementScenario& scenario, const RDistribution& global);

struct ModelIssue {
    std::string location;  // context label, or "model" for model-wide issues
    std::string message;
};

/// Checks the data invariants and reports every violation. Empty result
/// means the model is valid.
std::vector<ModelIssue> validate(const EmpiricalModel& model);

/// Reinterprets a boolean model as a rational one with the same 0/1
/// weights (a measure, not necessarily normalized). Rational input is
/// returned unchanged.
EmpiricalModel as_rational(const EmpiricalModel& model);

/// Rebuilds the model over renamed variables. `renaming` must be a
/// bijection on the variable set; tables are re-canonicalized to the new
/// variable order.
EmpiricalModel rename_variables(const EmpiricalModel& model,
                                const std::map<std::string, std::string>& renaming);

}  // namespace ctx

#endif
