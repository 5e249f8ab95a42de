#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/statevector.hpp"

namespace qsdc {

/// The named gate set. SX is the square root of X; Sdg/SXdg are the
/// adjoints of S/SX. CNOT takes targets {control, target}.
enum class GateId { I, X, Y, Z, S, Sdg, H, SX, SXdg, CNOT };

/// A named unitary acting on one or two qubits. The matrix is stored
/// row-major over the local basis; for two-qubit gates the local index
/// is bit(targets[0]) + 2*bit(targets[1]). Construction verifies
/// unitarity to within 1e-12.
class Gate {
public:
    Gate(std::string name, std::vector<Amplitude> matrix);

    /// Canonical gate for a GateId (matrices pinned in gates.cpp).
    static const Gate& named(GateId id);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    std::size_t dim() const { return std::size_t{1} << arity_; }
    const Amplitude& entry(std::size_t row, std::size_t col) const {
        return matrix_[row * dim() + col];
    }
    const std::vector<Amplitude>& matrix() const { return matrix_; }

    bool operator==(const Gate& other) const;

private:
    std::string name_;
    int arity_;
    std::vector<Amplitude> matrix_;
};

/// Case-insensitive name lookup ("x", "Sdg", "SX", ...).
std::optional<GateId> parse_gate_id(std::string_view name);

/// Canonical display name ("X", "Sdg", "SX", "CNOT", ...).
std::string_view gate_name(GateId id);

/// All nine single-qubit named gates, in declaration order.
std::vector<Gate> single_qubit_gates();

/// Applies `gate` to the listed qubits of `state` and returns the new
/// state; the input is untouched. Targets must be distinct, in range,
/// and match the gate arity.
StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::span<const int> targets);

StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::initializer_list<int> targets);

} // namespace qsdc
