#ifndef CTX_LOGICAL_BELL_HPP
#define CTX_LOGICAL_BELL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctx/model.hpp"
#include "ctx/rational.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

/// A boolean formula over atoms "variable = outcome".
class Formula {
public:
    enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff, Xor };

    using Ptr = std::shared_ptr<const Formula>;

    static Ptr constant(bool value);
    static Ptr atom(std::size_t variable, std::size_t outcome);
    static Ptr negation(Ptr operand);
    static Ptr connective(Kind kind, Ptr lhs, Ptr rhs);

    Kind kind() const { return kind_; }
    std::size_t variable() const { return variable_; }
    std::size_t outcome() const { return outcome_; }
    const Ptr& lhs() const { return lhs_; }
    const Ptr& rhs() const { return rhs_; }

    /// Evaluation under an assignment that covers every atom's variable.
    bool evaluate(const LocalAssignment& assignment) const;
    bool evaluate(const GlobalAssignment& global) const;

    /// Variables mentioned by atoms, sorted and deduplicated.
    std::vector<std::size_t> atom_variables() const;

private:
    Formula() = default;

    Kind kind_ = Kind::True;
    std::size_t variable_ = 0;
    std::size_t outcome_ = 0;
    Ptr lhs_;
    Ptr rhs_;
};

/// A formula attached to the context it is evaluated in. Every atom's
/// variable must lie in the context.
struct Proposition {
    std::vector<std::size_t> context;
    Formula::Ptr formula;
};

/// Renders the formula in the CLI syntax (atoms "a1=0", connectives
/// "!", "&", "|", "->", "<->", "(+)").
std::string formula_to_string(const MeasurementScenario& scenario, const Formula& formula);

/// Parses the CLI formula syntax. Precedence, tightest first: "!", "&",
/// "|", then "->" (right associative), then "<->" and "(+)" (left
/// associative, same level). Atom outcomes are outcome labels of the
/// atom's variable. Throws ParseError with a character position.
Formula::Ptr parse_formula(const MeasurementScenario& scenario, std::string_view text);

/// Parses "var,var,... : formula" and checks the atoms against the
/// context.
Proposition parse_proposition(const MeasurementScenario& scenario, std::string_view line);

/// Parses one proposition per non-empty line; '#' starts a comment.
std::vector<Proposition> parse_propositions(const MeasurementScenario& scenario,
                                            std::string_view text);

/// The semiring measure of the event described by the proposition: the
/// semiring sum of table weights over the satisfying assignments of the
/// proposition's context. For rational models this is the probability;
/// for boolean models it is the 0/1 possibility value. The context must
/// be a maximal context of the model.
Rational eval_probability(const EmpiricalModel& model, const Proposition& proposition);

/// Brute-force joint-satisfiability search over all global assignments in
/// canonical order: the first satisfying global, or std::nullopt. An empty
/// family is vacuously satisfiable.
std::optional<GlobalAssignment> jointly_satisfiable(const MeasurementScenario& scenario,
                                                    std::span<const Proposition> propositions);

/// The logical Bell bound: jointly unsatisfiable propositions with
/// measures p_i satisfy sum p_i <= N-1 for any model with a global
/// section, so `violation` is the excess over that bound (and is zero by
/// definition for satisfiable families, where the bound does not apply).
struct BellResult {
    std::vector<Rational> probabilities;
    Rational sum;
    std::int64_t bound = 0;  // N - 1
    Rational violation;
    bool satisfiable = false;
};

BellResult logical_bell(const EmpiricalModel& model, std::span<const Proposition> propositions);

/// For each maximal context, the disjunction over its support of the
/// conjunction of atoms describing each supported assignment. Each
/// proposition has measure 1 by construction; an empty support yields the
/// constant false.
std::vector<Proposition> canonical_support_propositions(const EmpiricalModel& model);

}  // namespace ctx

#endif
