#include "ctx/quantum.hpp"

#include <cmath>

#include "ctx/errors.hpp"

namespace ctx {

namespace {

constexpr double kNormTolerance = 1e-12;

}  // namespace

StateVector make_state(std::size_t qubit_count, std::vector<std::complex<double>> amplitudes) {
    if (qubit_count == 0 || amplitudes.size() != (std::size_t{1} << qubit_count)) {
        throw QuantumError("state vector must have 2^n amplitudes");
    }
    double norm2 = 0.0;
    for (const auto& amp : amplitudes) {
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
            throw QuantumError("state vector has a non-finite amplitude");
        }
        norm2 += std::norm(amp);
    }
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw QuantumError("state vector is not normalized");
    }
    return StateVector{qubit_count, std::move(amplitudes)};
}

StateVector bell_state() { return ghz_state(2); }

StateVector ghz_state(std::size_t qubit_count) {
    if (qubit_count < 2) {
        throw QuantumError("GHZ state needs at least 2 qubits");
    }
    std::vector<std::complex<double>> amplitudes(std::size_t{1} << qubit_count, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    amplitudes.front() = r;
    amplitudes.back() = r;
    return StateVector{qubit_count, std::move(amplitudes)};
}

std::pair<std::size_t, double> SettingTable::lookup(const std::string& variable) const {
    for (std::size_t party = 0; party < party_angles.size(); ++party) {
        const auto it = party_angles[party].find(variable);
        if (it != party_angles[party].end()) {
            return {party, it->second};
        }
    }
    throw QuantumError("variable '" + variable + "' belongs to no party");
}

double born_probability(const StateVector& state, std::span<const double> angles,
                        std::span<const int> outcomes) {
    const std::size_t n = state.qubit_count;
    if (angles.size() != n || outcomes.size() != n) {
        throw QuantumError("one angle and one outcome per party required");
    }
    // Basis vector for party k: (|0> + s e^{i a_k} |1>)/sqrt(2), s = +-1.
    // The projected amplitude is sum_z conj(coef(z)) amp[z].
    std::complex<double> projected = 0.0;
    const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
    for (std::size_t z = 0; z < state.amplitudes.size(); ++z) {
        if (state.amplitudes[z] == std::complex<double>(0.0, 0.0)) continue;
        std::complex<double> coef(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const bool bit = (z >> (n - 1 - k)) & 1;  // qubit 0 is the most significant bit
            if (bit) {
                const double sign = outcomes[k] ? -1.0 : 1.0;
                coef *= sign * std::polar(1.0, angles[k]);
            }
        }
        projected += std::conj(coef) * state.amplitudes[z];
    }
    projected *= scale;
    return std::norm(projected);
}

namespace {

// Exact rational value of a finite double.
Rational exact_rational(double value) {
    if (value == 0.0) return Rational(0);
    int exponent = 0;
    const double mantissa = std::frexp(value, &exponent);  // |mantissa| in [0.5, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));  // exact
    Rational result(scaled);
    const int shift = exponent - 53;
    if (shift >= 0) {
        result *= Rational(Integer(1) << shift);
    } else {
        result /= Rational(Integer(1) << -shift);
    }
    return result;
}

}  // namespace

std::optional<Rational> rationalize(double value, std::uint64_t max_denominator, double tol) {
    if (!std::isfinite(value) || max_denominator == 0) {
        return std::nullopt;
    }
    const Rational target = exact_rational(value);
    const Integer cap(max_denominator);

    // Continued-fraction walk over the exact value. Convergents p/q are
    // best approximants; once q would exceed the cap, the closest rational
    // with a bounded denominator is either the last convergent or the
    // largest semiconvergent whose denominator fits.
    Integer p_prev(0), q_prev(1);  // h_{-2}/k_{-2}
    Integer p_cur(1), q_cur(0);    // h_{-1}/k_{-1}
    Integer num = numerator(target);
    Integer den = denominator(target);
    Rational best;
    bool have_best = false;
    while (true) {
        Integer a = num / den;
        if (num < 0 && num % den != 0) --a;  // floor division
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        if (q_next > cap) {
            // The first convergent has denominator 1, so q_cur >= 1 here.
            const Integer a_max = (cap - q_prev) / q_cur;
            const Integer p_semi = a_max * p_cur + p_prev;
            const Integer q_semi = a_max * q_cur + q_prev;
            if (q_semi > 0) {
                const Rational semi(p_semi, q_semi);
                if (!have_best || abs(target - semi) < abs(target - best)) {
                    best = semi;
                    have_best = true;
                }
            }
            break;
        }
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        const Rational convergent(p_cur, q_cur);
        if (!have_best || abs(target - convergent) < abs(target - best)) {
            best = convergent;
            have_best = true;
        }
        const Integer remainder = num - a * den;
        if (remainder == 0) break;  // exact
        num = den;
        den = remainder;
    }
    if (!have_best) {
        return std::nullopt;
    }
    if (abs(target - best) > exact_rational(tol)) {
        return std::nullopt;
    }
    return best;
}

EmpiricalModel generate_model(const StateVector& state, const SettingTable& settings,
                              const MeasurementScenario& scenario, const SnapOptions& options) {
    const std::size_t parties = state.qubit_count;
    if (settings.party_angles.size() != parties) {
        throw QuantumError("setting table party count does not match the state");
    }

    std::vector<RDistribution> tables;
    tables.reserve(scenario.contexts().size());
    for (const auto& context : scenario.contexts()) {
        if (context.size() != parties) {
            throw QuantumError("context '" + scenario.context_label(context) +
                               "' does not pick one variable per party");
        }
        // angle per party, and for each context position its party slot
        std::vector<double> angles(parties, 0.0);
        std::vector<std::size_t> party_of(context.size());
        std::vector<bool> seen(parties, false);
        for (std::size_t p = 0; p < context.size(); ++p) {
            const auto [party, angle] = settings.lookup(scenario.variables()[context[p]]);
            if (seen[party]) {
                throw QuantumError("context '" + scenario.context_label(context) +
                                   "' picks two variables of one party");
            }
            seen[party] = true;
            angles[party] = angle;
            party_of[p] = party;
            if (scenario.outcomes(context[p]).size() != 2) {
                throw QuantumError("variable '" + scenario.variables()[context[p]] +
                                   "' must be binary");
            }
        }

        RDistribution::WeightMap weights;
        Rational row_sum(0);
        for (const auto& assignment : enumerate_assignments(scenario, context)) {
            std::vector<int> outcome_bits(parties, 0);
            for (std::size_t p = 0; p < context.size(); ++p) {
                outcome_bits[party_of[p]] = static_cast<int>(assignment.outcomes[p]);
            }
            const double probability = born_probability(state, angles, outcome_bits);
            const auto snapped =
                rationalize(probability, options.max_denominator, options.tol);
            if (!snapped) {
                throw QuantumError(
                    "cell (" + scenario.context_label(context) + ")(" +
                    scenario.assignment_label(assignment) + ") = " + std::to_string(probability) +
                    " does not snap to a rational with denominator <= " +
                    std::to_string(options.max_denominator));
            }
            row_sum += *snapped;
            if (*snapped != 0) {
                weights.emplace(assignment.outcomes, *snapped);
            }
        }
        if (row_sum != 1) {
            throw QuantumError("snapped row for context '" + scenario.context_label(context) +
                               "' sums to " + to_string(row_sum) + ", expected 1");
        }
        tables.emplace_back(Semiring::NonnegRational, context, std::move(weights));
    }
    return EmpiricalModel(scenario, Semiring::NonnegRational, std::move(tables));
}

}  // namespace ctx
