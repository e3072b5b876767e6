#ifndef CTX_LINEAR_HPP
#define CTX_LINEAR_HPP

#include <optional>
#include <vector>

#include "ctx/rational.hpp"
#include "ctx/simplex.hpp"

namespace ctx {

/// Solves A x = b over the rationals with x unconstrained in sign, by
/// exact Gaussian elimination with deterministic pivoting (first usable
/// column, first nonzero row below the pivot). Returns the particular
/// solution with all free variables set to zero, or std::nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);

}  // namespace ctx

#endif
