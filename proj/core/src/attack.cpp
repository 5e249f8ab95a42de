#include "qsdc/attack.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "qsdc/protocol.hpp"

namespace qsdc {

AttackSpec::AttackSpec(Node node_, ChainPosition position_, int target_, Gate gate_)
    : node(node_), position(position_), target(target_), gate(std::move(gate_)) {
    if (gate.arity() != 1) {
        throw std::invalid_argument("attack gate '" + gate.name() +
                                    "' must be single-qubit");
    }
    if (target != 0 && target != 1) {
        throw std::invalid_argument("attack target qubit must be 0 or 1, got " +
                                    std::to_string(target));
    }
}

AttackSpec AttackSpec::parse(std::string_view text) {
    std::array<std::string_view, 4> parts;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t sep = text.find(':', start);
        const bool last = (i == 3);
        if (last != (sep == std::string_view::npos)) {
            throw std::invalid_argument("bad attack spec '" + std::string(text) +
                                        "', expected node:position:gate:qubit");
        }
        parts[i] = last ? text.substr(start) : text.substr(start, sep - start);
        start = sep + 1;
    }
    const auto id = parse_gate_id(parts[2]);
    if (!id) {
        throw std::invalid_argument("unknown gate '" + std::string(parts[2]) +
                                    "' in attack spec");
    }
    if (parts[3] != "0" && parts[3] != "1") {
        throw std::invalid_argument("bad attack qubit '" + std::string(parts[3]) +
                                    "', expected 0 or 1");
    }
    return AttackSpec(parse_node(parts[0]), parse_position(parts[1]),
                      parts[3][0] - '0', Gate::named(*id));
}

std::string AttackSpec::str() const {
    std::string gate_lower = gate.name();
    for (char& c : gate_lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return std::string(node_name(node)) + ":" + std::string(position_name(position)) +
           ":" + gate_lower + ":" + std::to_string(target);
}

ProtocolCircuit inject(const ProtocolCircuit& circuit,
                       std::span<const AttackSpec> attacks) {
    ProtocolCircuit hacked = circuit;
    for (const AttackSpec& attack : attacks) {
        if (attack.gate.arity() != 1) {
            throw std::invalid_argument("attack gate '" + attack.gate.name() +
                                        "' must be single-qubit");
        }
        CircuitOp op{attack.gate, {attack.target}};
        auto& ops = hacked.chain(attack.node).ops;
        if (attack.position == ChainPosition::Begin) {
            ops.insert(ops.begin(), std::move(op));
        } else {
            ops.push_back(std::move(op));
        }
    }
    return hacked;
}

bool BijectionClassification::is_identity() const {
    for (int m = 0; m < 4; ++m) {
        if (f[m] != m) {
            return false;
        }
    }
    return true;
}

AttackClassification classify(std::span<const AttackSpec> attacks) {
    return classify_states(hacked_final_states(attacks));
}

AttackClassification classify_states(const std::array<StateVector, 4>& finals) {
    std::array<int, 4> f{};
    std::array<Amplitude, 4> phases{};
    bool all_basis = true;

    for (int m = 0; m < 4; ++m) {
        const StateVector& state = finals[m];
        if (state.n_qubits() != 2) {
            throw std::invalid_argument("classification expects 2-qubit final states");
        }
        std::size_t best = 0;
        double best_prob = 0.0;
        for (std::size_t b = 0; b < state.dim(); ++b) {
            const double p = std::norm(state.amp(b));
            if (p > best_prob) {
                best_prob = p;
                best = b;
            }
        }
        if (best_prob < 1.0 - kBasisDetectTol) {
            all_basis = false;
            break;
        }
        f[m] = static_cast<int>(best);
        phases[m] = state.amp(best) / std::abs(state.amp(best));
    }

    AttackClassification result;
    if (!all_basis) {
        ScramblingClassification scrambling{};
        for (int m = 0; m < 4; ++m) {
            for (std::size_t b = 0; b < 4; ++b) {
                scrambling.amplitudes[m][b] = finals[m].amp(b);
            }
            scrambling.success_prob[m] = std::norm(finals[m].amp(m));
        }
        result.kind = AttackClassification::Kind::Scrambling;
        result.scrambling = std::move(scrambling);
        return result;
    }

    // All four outputs are basis states, so the remap must be one-to-one
    // (boundary gate insertions cannot collapse two encodings).
    std::array<bool, 4> seen{};
    for (int m = 0; m < 4; ++m) {
        if (seen[f[m]]) {
            throw std::logic_error("basis-state outputs did not form a bijection");
        }
        seen[f[m]] = true;
    }

    BijectionClassification bijection{f, phases};
    bool phases_trivial = true;
    for (const Amplitude& phase : phases) {
        if (std::abs(phase - Amplitude{1.0, 0.0}) > kBasisDetectTol) {
            phases_trivial = false;
        }
    }
    if (bijection.is_identity() && phases_trivial) {
        result.kind = AttackClassification::Kind::Clean;
        return result;
    }
    result.kind = AttackClassification::Kind::Bijection;
    result.bijection = std::move(bijection);
    return result;
}

Gate quarantine_correction(const BijectionClassification& bijection) {
    std::array<bool, 4> seen{};
    for (int m = 0; m < 4; ++m) {
        if (bijection.f[m] < 0 || bijection.f[m] > 3 || seen[bijection.f[m]]) {
            throw std::invalid_argument("bijection map is not a permutation");
        }
        seen[bijection.f[m]] = true;
    }
    // P = sum_m |m><f(m)|, i.e. column f(m) carries basis state m.
    std::vector<Amplitude> matrix(16, 0.0);
    for (std::size_t m = 0; m < 4; ++m) {
        matrix[m * 4 + static_cast<std::size_t>(bijection.f[m])] = 1.0;
    }
    return Gate("quarantine", std::move(matrix));
}

} // namespace qsdc
