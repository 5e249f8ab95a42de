#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsdc/statevector.hpp"

namespace qsdc {

/// Shot tally over the computational basis. Total always equals the
/// number of shots taken.
class Counts {
public:
    Counts(int n_qubits, std::vector<std::uint64_t> counts);

    static Counts from_map(int n_qubits,
                           const std::map<std::string, std::uint64_t>& m);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t shots() const { return shots_; }
    std::uint64_t count(std::size_t index) const { return counts_[index]; }
    std::uint64_t count(std::string_view label) const;
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    std::map<std::string, std::uint64_t> to_map() const;

    /// Empirical frequencies count/shots.
    Distribution frequencies() const;

    bool operator==(const Counts&) const = default;

private:
    int n_qubits_;
    std::uint64_t shots_;
    std::vector<std::uint64_t> counts_;
};

// Sampling is fully deterministic from the 64-bit seed: draws come from
// mt19937_64 mapped to [0,1) by the 53-bit recipe (x >> 11) * 2^-53 and
// inverted through the cumulative distribution. Both steps are pinned
// by the C++ standard, so identical (input, shots, seed) gives
// bit-identical counts on any platform.

/// i.i.d. draws from an explicit distribution.
Counts sample_distribution(const Distribution& dist, std::uint64_t shots,
                           std::uint64_t seed);

/// i.i.d. Born-rule draws from a state; shots must be >= 1.
Counts sample(const StateVector& state, std::uint64_t shots,
              std::uint64_t seed);

} // namespace qsdc
