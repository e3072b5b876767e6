#ifndef CTX_QUANTUM_HPP
#define CTX_QUANTUM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctx/model.hpp"
#include "ctx/rational.hpp"

namespace ctx {

/// A pure n-qubit state. Amplitudes are indexed with qubit 0 as the most
/// significant bit. The vector must have unit norm within 1e-12.
struct StateVector {
    std::size_t qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;
};

/// Checks length and norm; throws QuantumError on failure.
StateVector make_state(std::size_t qubit_count, std::vector<std::complex<double>> amplitudes);

/// (|00> + |11>)/sqrt(2).
StateVector bell_state();

/// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
StateVector ghz_state(std::size_t qubit_count);

/// Per party (= qubit index), the XY-plane measurement angle of each of
/// that party's variables. A variable may belong to only one party.
struct SettingTable {
    std::vector<std::map<std::string, double>> party_angles;

    /// (party, angle) for a variable name; throws QuantumError if the
    /// variable belongs to no party.
    std::pair<std::size_t, double> lookup(const std::string& variable) const;
};

/// Born probability of a joint outcome when party k measures in the
/// XY-plane basis { (|0> + e^{i a_k}|1>)/sqrt(2) for outcome 0,
/// (|0> - e^{i a_k}|1>)/sqrt(2) for outcome 1 }. One angle and one
/// outcome bit per party.
double born_probability(const StateVector& state, std::span<const double> angles,
                        std::span<const int> outcomes);

/// Nearest rational with denominator <= max_denominator (continued
/// fraction / Stern-Brocot best approximant, computed exactly from the
/// binary value of the double). Returned only when it lies within `tol`
/// of the input.
std::optional<Rational> rationalize(double value, std::uint64_t max_denominator, double tol);

struct SnapOptions {
    std::uint64_t max_denominator = 64;
    double tol = 1e-9;
};

/// Fills each table cell of the scenario with the Born probability, then
/// snaps every cell to an exact rational. Every context must pick exactly
/// one variable per party and every variable must be binary. Throws
/// QuantumError when a cell fails to snap (reporting the cell and float
/// value) or a snapped row does not sum to exactly 1.
EmpiricalModel generate_model(const StateVector& state, const SettingTable& settings,
                              const MeasurementScenario& scenario, const SnapOptions& options = {});

}  // namespace ctx

#endif
