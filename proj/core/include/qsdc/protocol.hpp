#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "qsdc/attack.hpp"
#include "qsdc/circuit.hpp"
#include "qsdc/noise.hpp"
#include "qsdc/sampling.hpp"

namespace qsdc {

/// Clean superdense-coding pipeline for a message: source prepares the
/// Bell pair (H on q0, then CNOT q0->q1), Alice encodes on her qubit
/// (X if x=1, then Z if y=1), Bob decodes (CNOT q0->q1, then H on q0).
ProtocolCircuit build_protocol(Message message);

/// The shared Bell pair (|00> + |11>) / sqrt(2).
StateVector source_state();

/// Final vectors of the attacked protocol for all four messages,
/// noiseless, indexed by Message::index.
std::array<StateVector, 4> hacked_final_states(std::span<const AttackSpec> attacks);

struct RunResult {
    StateVector final_state; // exact post-circuit vector
    Distribution ideal;      // measure_probs(final_state), noise-free
    Counts counts;           // sampled; readout noise applied when given

    bool operator==(const RunResult&) const = default;
};

/// One end-to-end protocol activation: injects the attacks, runs the
/// chains, reads out. Deterministic: identical (circuit, attacks,
/// noise, shots, seed) gives a bit-identical record.
RunResult run_protocol(const ProtocolCircuit& circuit,
                       std::span<const AttackSpec> attacks,
                       const std::optional<NoiseModel>& noise,
                       std::uint64_t shots, std::uint64_t seed);

} // namespace qsdc
