#include "qsdc/sampling.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace qsdc {

Counts::Counts(int n_qubits, std::vector<std::uint64_t> counts)
    : n_qubits_(n_qubits), shots_(0), counts_(std::move(counts)) {
    if (counts_.size() != std::size_t{1} << n_qubits) {
        throw std::invalid_argument("count vector has length " +
                                    std::to_string(counts_.size()) + ", expected 2^" +
                                    std::to_string(n_qubits));
    }
    for (std::uint64_t c : counts_) {
        shots_ += c;
    }
    if (shots_ == 0) {
        throw std::invalid_argument("counts contain zero shots");
    }
}

Counts Counts::from_map(int n_qubits, const std::map<std::string, std::uint64_t>& m) {
    std::vector<std::uint64_t> counts(std::size_t{1} << n_qubits, 0);
    for (const auto& [label, c] : m) {
        if (label.size() != static_cast<std::size_t>(n_qubits)) {
            throw std::invalid_argument("count label '" + label + "' is not " +
                                        std::to_string(n_qubits) + " bits");
        }
        counts[basis_index(label)] += c;
    }
    return Counts(n_qubits, std::move(counts));
}

std::uint64_t Counts::count(std::string_view label) const {
    if (label.size() != static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("count label '" + std::string(label) +
                                    "' is not " + std::to_string(n_qubits_) + " bits");
    }
    return counts_[basis_index(label)];
}

std::map<std::string, std::uint64_t> Counts::to_map() const {
    std::map<std::string, std::uint64_t> m;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        m[basis_label(i, n_qubits_)] = counts_[i];
    }
    return m;
}

Distribution Counts::frequencies() const {
    std::vector<double> probs(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        probs[i] = static_cast<double>(counts_[i]) / static_cast<double>(shots_);
    }
    return Distribution::from_probs(n_qubits_, std::move(probs));
}

Counts sample_distribution(const Distribution& dist, std::uint64_t shots,
                           std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be >= 1");
    }
    std::vector<double> cumulative(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist.prob(i);
        cumulative[i] = acc;
    }
    cumulative.back() = 1.0; // guard the final bucket against rounding

    std::mt19937_64 engine(seed);
    std::vector<std::uint64_t> counts(dist.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit canonical uniform in [0, 1).
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        std::size_t lo = 0;
        std::size_t hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < cumulative[mid]) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        ++counts[lo];
    }
    return Counts(dist.n_qubits(), std::move(counts));
}

Counts sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    return sample_distribution(measure_probs(state), shots, seed);
}

} // namespace qsdc
