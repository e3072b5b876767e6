#ifndef CTX_DISTRIBUTION_HPP
#define CTX_DISTRIBUTION_HPP

#include <map>
#include <span>
#include <vector>

#include "ctx/rational.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

/// The two commutative semirings the library ships. Rational weights use
/// ordinary + and *; boolean weights are 0/1 with "or" as addition and
/// "and" as multiplication.
enum class Semiring {
    NonnegRational,
    Boolean,
};

const char* semiring_name(Semiring semiring);

Rational semiring_add(Semiring semiring, const Rational& a, const Rational& b);
Rational semiring_mul(Semiring semiring, const Rational& a, const Rational& b);

/// A finite-support semiring-valued distribution over the assignments of
/// one context. Weights are stored sparsely: zero entries are omitted and
/// keys are outcome-index vectors aligned with the context.
///
/// The type itself is permissive — it can hold data that violates the
/// normalization (rational) or non-emptiness (boolean) invariants, so the
/// CLI can diagnose bad inputs. `validate` on the owning model reports
/// such violations.
class RDistribution {
public:
    using WeightMap = std::map<std::vector<std::size_t>, Rational>;

    /// Zero-weight entries are dropped. Throws DistributionError if a key
    /// length does not match the context length.
    RDistribution(Semiring semiring, std::vector<std::size_t> context, WeightMap weights);

    static RDistribution point_mass(Semiring semiring, const LocalAssignment& assignment);

    Semiring semiring() const { return semiring_; }
    const std::vector<std::size_t>& context() const { return context_; }
    const WeightMap& weights() const { return weights_; }

    /// Weight of an outcome vector; zero when absent.
    Rational weight(std::span<const std::size_t> outcomes) const;
    Rational weight(const LocalAssignment& assignment) const;

    /// Semiring sum of all weights.
    Rational total() const;

    bool operator==(const RDistribution&) const = default;

private:
    Semiring semiring_;
    std::vector<std::size_t> context_;
    WeightMap weights_;
};

/// Restriction of a distribution: the weight of t over `subcontext` is the
/// semiring sum of the weights of every s with s|_subcontext = t.
/// Throws DistributionError when `subcontext` is not contained.
RDistribution marginalize(const RDistribution& dist, std::span<const std::size_t> subcontext);

/// Push-forward along an assignment relabeling: the weight of a target
/// point is the semiring sum of the weights of its preimage. `relabeling`
/// must cover every support point ("relabeling not total" otherwise) and
/// every image must be an assignment over `target_context`.
RDistribution push_forward(const RDistribution& dist,
                           const std::map<std::vector<std::size_t>, LocalAssignment>& relabeling,
                           std::vector<std::size_t> target_context);

/// The possibilistic support: boolean weight 1 exactly where the weight is
/// nonzero. This is the lift of the unique semiring homomorphism from the
/// nonnegative rationals to the booleans. Boolean input is returned as is.
RDistribution support(const RDistribution& dist);

/// Pointwise convex combination of rational distributions over a shared
/// context. Throws DistributionError on mismatched contexts, non-rational
/// inputs, or weights that do not sum to 1.
RDistribution mixture(std::span<const RDistribution> dists, std::span<const Rational> weights);

}  // namespace ctx

#endif
