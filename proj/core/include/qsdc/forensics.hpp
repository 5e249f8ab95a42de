#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsdc/attack.hpp"
#include "qsdc/noise.hpp"
#include "qsdc/protocol.hpp"

namespace qsdc {

/// Per-qubit mismatch rates against a message's intended readout:
/// alice_error = P(measured q0 != y), bob_error = P(measured q1 != x).
struct QubitErrorRates {
    double alice_error = 0.0;
    double bob_error = 0.0;

    bool operator==(const QubitErrorRates&) const = default;
};

using ErrorRateReport = std::map<Message, QubitErrorRates>;

/// Marginal error rates from measured counts, one entry per message.
ErrorRateReport error_rates(const std::map<Message, Counts>& counts_per_message);

/// Total variation distance (1/2) sum |a - b|; outcome spaces must match.
double tv_distance(const Distribution& a, const Distribution& b);

/// Two class granularities: hacked protocols can share final vectors
/// (up to per-message global phase) or merely share readout
/// distributions.
enum class Granularity { VectorUpToPhase, Distribution };

struct EquivalenceClass {
    std::string key; // canonical fingerprint
    std::vector<AttackSpec> members;
};

/// Gate set used for the forensics grid when none is given: all nine
/// single-qubit named gates.
std::vector<Gate> default_gate_set();

/// Simulates every single insertion in gate_set x {source, alice, bob}
/// x {begin, end} x {q0, q1} across all four messages and groups the
/// grid by fingerprint. Class and member order is canonical: grid
/// order, classes by first member.
std::vector<EquivalenceClass> enumerate_equivalences(std::span<const Gate> gate_set,
                                                     Granularity granularity);

struct MatchResult {
    std::vector<AttackSpec> attacks; // the hypothesis
    double mean_tv = 0.0;            // averaged over observed messages
    int rank = 0;                    // 1-based; ties share a rank
};

/// Ranks attack hypotheses against observed counts by mean TV distance
/// between the empirical frequencies and each hypothesis's predicted
/// (noise-adjusted) distribution. Ties share a rank and are ordered by
/// their serialization.
std::vector<MatchResult> signature_match(const std::map<Message, Counts>& observed,
                                         std::vector<std::vector<AttackSpec>> hypotheses,
                                         const std::optional<NoiseModel>& noise = {});

} // namespace qsdc
