#ifndef CTX_CORPUS_HPP
#define CTX_CORPUS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctx/logical_bell.hpp"
#include "ctx/model.hpp"
#include "ctx/quantum.hpp"

namespace ctx {

/// A two-variable boolean constraint: left = right, or left = !right when
/// negated.
struct BooleanEquation {
    std::string left;
    std::string right;
    bool negated = false;
};

/// The canonical built-in models:
///   bell     - the two-party probability table (rational)
///   hardy    - the Hardy possibility table (boolean)
///   pr       - the Popescu-Rohrlich box (boolean)
///   ghz      - the GHZ parity-context support, derived from the state
///              via the quantum generator (boolean)
///   specker  - the Specker triangle (boolean)
///   liar:N   - the Liar cycle of length N (boolean)
/// Throws CorpusError on unknown names or malformed N.
EmpiricalModel builtin(std::string_view name);

/// Names accepted by `builtin`, for help text ("liar:N" listed once).
std::vector<std::string> builtin_names();

MeasurementScenario bell_scenario();
MeasurementScenario ghz_scenario();

/// XY-plane angles realizing the Bell table on the Bell state. The basis
/// convention leaves a sign choice free; these constants are the first
/// sign assignment (in +,+ / +,- / -,+ / -,- order) that reproduces the
/// table, as pinned by the derivation test.
SettingTable bell_settings();

/// X at angle 0, Y at angle pi/2 for each of the three parties.
SettingTable ghz_settings();

/// The four correlation propositions of the Bell table (three
/// biconditionals and one exclusive-or, written with outcome-0 atoms).
std::vector<Proposition> bell_propositions(const MeasurementScenario& scenario);

/// The boolean model of an equation system: one two-variable context per
/// equation, whose table holds the satisfying assignments. Equations
/// sharing the same variable pair are conjoined into one table (which may
/// leave it empty). All variables are binary with outcomes {0,1}.
EmpiricalModel equation_system(std::span<const BooleanEquation> equations);

/// x1 = x2, ..., x_{n-1} = x_n, x_n = !x1 for n >= 2.
EmpiricalModel liar_cycle(std::size_t n);

/// Removes one maximal context and its table; variables that occur in no
/// remaining context are removed. Throws ModelError when the context is
/// not maximal or is the last one.
EmpiricalModel drop_context(const EmpiricalModel& model, std::span<const std::size_t> context);

}  // namespace ctx

#endif
