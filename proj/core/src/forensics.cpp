#include "qsdc/forensics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qsdc {

namespace {

// 1e-8 rounding keeps the fingerprint stable against pure float noise;
// all analytic amplitudes in this protocol sit far from the midpoints.
long long quantize(double v) {
    return std::llround(v * 1e8);
}

void append_quantized(std::string& out, double re, double im) {
    out += std::to_string(quantize(re));
    out += ',';
    out += std::to_string(quantize(im));
    out += ';';
}

std::string vector_fingerprint(const std::array<StateVector, 4>& finals) {
    std::string key;
    for (const StateVector& state : finals) {
        // Phase-normalize on the largest-magnitude amplitude, ties to
        // the lowest basis index.
        std::size_t anchor = 0;
        double best = -1.0;
        for (std::size_t b = 0; b < state.dim(); ++b) {
            const double mag = std::abs(state.amp(b));
            if (mag > best + 1e-9) {
                best = mag;
                anchor = b;
            }
        }
        const Amplitude phase = state.amp(anchor) / std::abs(state.amp(anchor));
        for (std::size_t b = 0; b < state.dim(); ++b) {
            const Amplitude a = state.amp(b) / phase;
            append_quantized(key, a.real(), a.imag());
        }
        key += '|';
    }
    return key;
}

std::string distribution_fingerprint(const std::array<StateVector, 4>& finals) {
    std::string key;
    for (const StateVector& state : finals) {
        const Distribution dist = measure_probs(state);
        for (std::size_t b = 0; b < dist.size(); ++b) {
            key += std::to_string(quantize(dist.prob(b)));
            key += ';';
        }
        key += '|';
    }
    return key;
}

std::string hypothesis_str(const std::vector<AttackSpec>& attacks) {
    if (attacks.empty()) {
        return "clean";
    }
    std::string out;
    for (const AttackSpec& a : attacks) {
        if (!out.empty()) {
            out += '+';
        }
        out += a.str();
    }
    return out;
}

} // namespace

ErrorRateReport error_rates(const std::map<Message, Counts>& counts_per_message) {
    if (counts_per_message.empty()) {
        throw std::invalid_argument("error_rates needs at least one message's counts");
    }
    ErrorRateReport report;
    for (const auto& [message, counts] : counts_per_message) {
        if (counts.n_qubits() != 2) {
            throw std::invalid_argument("error_rates expects 2-qubit counts");
        }
        const double shots = static_cast<double>(counts.shots());
        double alice_miss = 0.0;
        double bob_miss = 0.0;
        for (std::size_t b = 0; b < 4; ++b) {
            const int q0 = static_cast<int>(b & 1);
            const int q1 = static_cast<int>(b >> 1 & 1);
            const double freq = static_cast<double>(counts.count(b)) / shots;
            if (q0 != message.y) {
                alice_miss += freq;
            }
            if (q1 != message.x) {
                bob_miss += freq;
            }
        }
        report[message] = QubitErrorRates{alice_miss, bob_miss};
    }
    return report;
}

double tv_distance(const Distribution& a, const Distribution& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("tv_distance outcome spaces differ: " +
                                    std::to_string(a.n_qubits()) + " vs " +
                                    std::to_string(b.n_qubits()) + " qubits");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::abs(a.prob(i) - b.prob(i));
    }
    return 0.5 * total;
}

std::vector<Gate> default_gate_set() {
    return single_qubit_gates();
}

std::vector<EquivalenceClass> enumerate_equivalences(std::span<const Gate> gate_set,
                                                     Granularity granularity) {
    for (const Gate& gate : gate_set) {
        if (gate.arity() != 1) {
            throw std::invalid_argument("equivalence grid takes single-qubit gates, got '" +
                                        gate.name() + "'");
        }
    }
    std::vector<EquivalenceClass> classes;
    std::map<std::string, std::size_t> key_to_class;
    for (const Gate& gate : gate_set) {
        for (Node node : {Node::Source, Node::Alice, Node::Bob}) {
            for (ChainPosition pos : {ChainPosition::Begin, ChainPosition::End}) {
                for (int qubit : {0, 1}) {
                    const AttackSpec attack(node, pos, qubit, gate);
                    const auto finals = hacked_final_states({&attack, 1});
                    const std::string key = granularity == Granularity::VectorUpToPhase
                                                ? vector_fingerprint(finals)
                                                : distribution_fingerprint(finals);
                    auto [it, inserted] = key_to_class.emplace(key, classes.size());
                    if (inserted) {
                        classes.push_back(EquivalenceClass{key, {}});
                    }
                    classes[it->second].members.push_back(attack);
                }
            }
        }
    }
    return classes;
}

std::vector<MatchResult> signature_match(const std::map<Message, Counts>& observed,
                                         std::vector<std::vector<AttackSpec>> hypotheses,
                                         const std::optional<NoiseModel>& noise) {
    if (observed.empty()) {
        throw std::invalid_argument("signature_match needs observed counts");
    }
    std::vector<MatchResult> results;
    results.reserve(hypotheses.size());
    for (std::vector<AttackSpec>& hypothesis : hypotheses) {
        double total = 0.0;
        for (const auto& [message, counts] : observed) {
            const Distribution ideal =
                measure_probs(simulate(inject(build_protocol(message), hypothesis)));
            const Distribution expected = noise ? apply_noise(ideal, *noise) : ideal;
            total += tv_distance(counts.frequencies(), expected);
        }
        results.push_back(MatchResult{std::move(hypothesis),
                                      total / static_cast<double>(observed.size()), 0});
    }
    std::sort(results.begin(), results.end(), [](const MatchResult& a, const MatchResult& b) {
        if (std::abs(a.mean_tv - b.mean_tv) > 1e-12) {
            return a.mean_tv < b.mean_tv;
        }
        return hypothesis_str(a.attacks) < hypothesis_str(b.attacks);
    });
    // Competition ranking; exact ties share a rank.
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i > 0 && std::abs(results[i].mean_tv - results[i - 1].mean_tv) <= 1e-12) {
            results[i].rank = results[i - 1].rank;
        } else {
            results[i].rank = static_cast<int>(i) + 1;
        }
    }
    return results;
}

} // namespace qsdc
