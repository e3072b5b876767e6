#ifndef CTX_SIMPLEX_HPP
#define CTX_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "ctx/rational.hpp"

namespace ctx {

using Matrix = std::vector<std::vector<Rational>>;

/// Decides feasibility of { A x = b, x >= 0 } exactly, by a phase-one
/// simplex with Bland's anti-cycling rule (entering variable: smallest
/// index with negative reduced cost; leaving variable: smallest basic
/// index among the minimum-ratio rows). Bland's rule guarantees
/// termination, so the verdict is exact, never tolerance-dependent.
///
/// Returns a feasible point when one exists, std::nullopt otherwise.
/// Rows with negative right-hand side are negated internally, and
/// linearly dependent rows are handled by the artificial basis.
std::optional<std::vector<Rational>> feasible_point(const Matrix& a, std::vector<Rational> b);

}  // namespace ctx

#endif
