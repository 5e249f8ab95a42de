#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qsdc {

using Amplitude = std::complex<double>;

// Tolerances used across the engine: structural checks (unitarity) at
// 1e-12, state/distribution comparisons at 1e-10.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kStateTol = 1e-10;

// Maximum register size the dense engine accepts.
inline constexpr int kMaxQubits = 20;

// Basis index <-> display string. Bit q of the index is qubit q; the
// display string lists the highest qubit first, so two-qubit strings
// read q1q0 (Bob's bit first, then Alice's).
std::string basis_label(std::size_t index, int n_qubits);
std::size_t basis_index(std::string_view label);

/// Dense complex statevector over the computational basis of n qubits.
///
/// Immutable value type: every operation produces a new vector. Stored
/// states are always normalized (sum |amp|^2 = 1 within 1e-10) and
/// finite; constructors reject anything else.
class StateVector {
public:
    /// |0...0> on n qubits.
    static StateVector zero(int n_qubits);

    /// Computational basis state |index> on n qubits.
    static StateVector basis(int n_qubits, std::size_t index);

    /// Builds a state from explicit amplitudes (length must be 2^n).
    static StateVector from_amplitudes(int n_qubits, std::vector<Amplitude> amps);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const Amplitude& amp(std::size_t index) const { return amps_[index]; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

    double norm() const;

    /// Exact (bitwise) equality; use approx_equal for tolerant checks.
    bool operator==(const StateVector&) const = default;

private:
    StateVector(int n_qubits, std::vector<Amplitude> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// Probability distribution over the computational basis strings of a
/// fixed register. Probabilities lie in [0,1] and sum to 1 within 1e-10.
class Distribution {
public:
    static Distribution from_probs(int n_qubits, std::vector<double> probs);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t index) const { return probs_[index]; }
    double prob(std::string_view label) const;
    const std::vector<double>& probs() const { return probs_; }

    bool operator==(const Distribution&) const = default;

private:
    Distribution(int n_qubits, std::vector<double> probs)
        : n_qubits_(n_qubits), probs_(std::move(probs)) {}

    int n_qubits_;
    std::vector<double> probs_;
};

/// Born-rule readout: probs[b] = |amp[b]|^2. Rejects states whose norm
/// has drifted beyond 1e-10.
Distribution measure_probs(const StateVector& state);

/// True iff a unit scalar c exists with ||a - c*b|| <= tol. Uses the
/// closed-form minimum ||a||^2 + ||b||^2 - 2|<b|a>|, so it is exact on
/// analytic inputs. Rejects dimension mismatches.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol = kStateTol);

/// Phase-sensitive comparison: max_i |a_i - b_i| <= tol.
bool approx_equal(const StateVector& a, const StateVector& b,
                  double tol = kStateTol);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

} // namespace qsdc
