#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/circuit.hpp"

namespace qsdc {

// Threshold for calling a final state "a basis state up to phase":
// largest basis overlap must reach 1 - kBasisDetectTol.
inline constexpr double kBasisDetectTol = 1e-8;

/// One malware gate insertion: a single-qubit gate spliced onto the
/// start or end of a node's chain.
///
/// Serialized as "node:position:gate:qubit" (e.g. "alice:end:x:0");
/// parsing is case-insensitive, emission is canonical lower-case.
struct AttackSpec {
    Node node;
    ChainPosition position;
    int target;
    Gate gate;

    AttackSpec(Node node, ChainPosition position, int target, Gate gate);

    static AttackSpec parse(std::string_view text);
    std::string str() const;

    bool operator==(const AttackSpec&) const = default;
};

/// Returns a copy of `circuit` with each attack's gate prepended
/// (Begin) or appended (End) to the named node's chain, processed in
/// list order. The input circuit is unchanged.
ProtocolCircuit inject(const ProtocolCircuit& circuit,
                       std::span<const AttackSpec> attacks);

/// Hacked protocol that lands every message on a basis state up to a
/// global phase: outcome map f plus the per-message unit phases.
/// Phases are reported for completeness but are unobservable; only f
/// matters for comparing classifications.
struct BijectionClassification {
    std::array<int, 4> f;           // f[message index] = outcome index
    std::array<Amplitude, 4> phases;

    bool is_identity() const;
};

/// Hacked protocol that leaves superpositions at readout: the full
/// amplitude table psi_xy(wz) and each message's success probability
/// |psi_xy(xy)|^2.
struct ScramblingClassification {
    std::array<std::array<Amplitude, 4>, 4> amplitudes; // [message][outcome]
    std::array<double, 4> success_prob;
};

struct AttackClassification {
    enum class Kind { Clean, Bijection, Scrambling };

    Kind kind = Kind::Clean;
    std::optional<BijectionClassification> bijection;
    std::optional<ScramblingClassification> scrambling;
};

/// Runs the hacked protocol noiselessly for all four messages and
/// classifies the result. Clean requires f = identity with every phase
/// equal to 1 within tolerance.
AttackClassification classify(std::span<const AttackSpec> attacks);

/// Classification core: takes the four final states directly (indexed
/// by Message::index). Lets callers classify protocols with extra
/// post-processing, e.g. a quarantine correction on Bob's chain.
AttackClassification classify_states(const std::array<StateVector, 4>& finals);

/// Permutation unitary P with P|f(xy)> = |xy>. Appended to the end of
/// Bob's chain it restores every message's readout distribution to
/// {xy: 1}; the residual phases are unobservable.
Gate quarantine_correction(const BijectionClassification& bijection);

} // namespace qsdc
