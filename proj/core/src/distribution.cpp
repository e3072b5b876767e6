#include "ctx/distribution.hpp"

#include <algorithm>

#include "ctx/errors.hpp"

namespace ctx {

const char* semiring_name(Semiring semiring) {
    switch (semiring) {
        case Semiring::NonnegRational: return "rational";
        case Semiring::Boolean: return "boolean";
    }
    return "?";
}

Rational semiring_add(Semiring semiring, const Rational& a, const Rational& b) {
    if (semiring == Semiring::Boolean) {
        return (a != 0 || b != 0) ? Rational(1) : Rational(0);
    }
    return a + b;
}

Rational semiring_mul(Semiring semiring, const Rational& a, const Rational& b) {
    if (semiring == Semiring::Boolean) {
        return (a != 0 && b != 0) ? Rational(1) : Rational(0);
    }
    return a * b;
}

RDistribution::RDistribution(Semiring semiring, std::vector<std::size_t> context,
                             WeightMap weights)
    : semiring_(semiring), context_(std::move(context)) {
    if (!std::ranges::is_sorted(context_) ||
        std::ranges::adjacent_find(context_) != context_.end()) {
        throw DistributionError("distribution context must be sorted and duplicate-free");
    }
    for (auto& [outcomes, weight] : weights) {
        if (outcomes.size() != context_.size()) {
            throw DistributionError("weight key arity does not match the context");
        }
        if (weight != 0) {
            weights_.emplace(outcomes, std::move(weight));
        }
    }
}

RDistribution RDistribution::point_mass(Semiring semiring, const LocalAssignment& assignment) {
    WeightMap weights;
    weights.emplace(assignment.outcomes, Rational(1));
    return RDistribution(semiring, assignment.context, std::move(weights));
}

Rational RDistribution::weight(std::span<const std::size_t> outcomes) const {
    const auto it = weights_.find(std::vector<std::size_t>(outcomes.begin(), outcomes.end()));
    return it == weights_.end() ? Rational(0) : it->second;
}

Rational RDistribution::weight(const LocalAssignment& assignment) const {
    if (assignment.context != context_) {
        throw DistributionError("assignment context does not match the distribution");
    }
    return weight(assignment.outcomes);
}

Rational RDistribution::total() const {
    Rational total(0);
    for (const auto& [outcomes, weight] : weights_) {
        total = semiring_add(semiring_, total, weight);
    }
    return total;
}

RDistribution marginalize(const RDistribution& dist, std::span<const std::size_t> subcontext) {
    if (!context_subset(subcontext, dist.context())) {
        throw DistributionError("marginalization target is not contained in the context");
    }
    // Positions of the subcontext inside the context.
    std::vector<std::size_t> positions;
    positions.reserve(subcontext.size());
    for (std::size_t v : subcontext) {
        const auto it = std::ranges::lower_bound(dist.context(), v);
        positions.push_back(static_cast<std::size_t>(it - dist.context().begin()));
    }

    RDistribution::WeightMap restricted;
    for (const auto& [outcomes, weight] : dist.weights()) {
        std::vector<std::size_t> key;
        key.reserve(positions.size());
        for (std::size_t p : positions) key.push_back(outcomes[p]);
        auto [it, inserted] = restricted.emplace(std::move(key), weight);
        if (!inserted) {
            it->second = semiring_add(dist.semiring(), it->second, weight);
        }
    }
    return RDistribution(dist.semiring(),
                         std::vector<std::size_t>(subcontext.begin(), subcontext.end()),
                         std::move(restricted));
}

RDistribution push_forward(const RDistribution& dist,
                           const std::map<std::vector<std::size_t>, LocalAssignment>& relabeling,
                           std::vector<std::size_t> target_context) {
    RDistribution::WeightMap pushed;
    for (const auto& [outcomes, weight] : dist.weights()) {
        const auto it = relabeling.find(outcomes);
        if (it == relabeling.end()) {
            throw DistributionError("relabeling is not total on the support");
        }
        if (it->second.context != target_context) {
            throw DistributionError("relabeled assignment is not over the target context");
        }
        auto [slot, inserted] = pushed.emplace(it->second.outcomes, weight);
        if (!inserted) {
            slot->second = semiring_add(dist.semiring(), slot->second, weight);
        }
    }
    return RDistribution(dist.semiring(), std::move(target_context), std::move(pushed));
}

RDistribution support(const RDistribution& dist) {
    if (dist.semiring() == Semiring::Boolean) {
        return dist;
    }
    RDistribution::WeightMap weights;
    for (const auto& [outcomes, weight] : dist.weights()) {
        weights.emplace(outcomes, Rational(1));
    }
    return RDistribution(Semiring::Boolean, dist.context(), std::move(weights));
}

RDistribution mixture(std::span<const RDistribution> dists, std::span<const Rational> weights) {
    if (dists.empty() || dists.size() != weights.size()) {
        throw DistributionError("mixture needs one weight per distribution");
    }
    Rational total(0);
    for (const auto& w : weights) total += w;
    if (total != 1) {
        throw DistributionError("mixture weights sum to " + to_string(total) + ", expected 1");
    }
    const auto& context = dists.front().context();
    RDistribution::WeightMap combined;
    for (std::size_t i = 0; i < dists.size(); ++i) {
        if (dists[i].semiring() != Semiring::NonnegRational) {
            throw DistributionError("mixture requires rational distributions");
        }
        if (dists[i].context() != context) {
            throw DistributionError("mixture distributions must share one context");
        }
        for (const auto& [outcomes, weight] : dists[i].weights()) {
            combined[outcomes] += weights[i] * weight;
        }
    }
    return RDistribution(Semiring::NonnegRational, context, std::move(combined));
}

}  // namespace ctx
