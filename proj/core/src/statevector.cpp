#include "qsdc/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
}

} // namespace

std::string basis_label(std::size_t index, int n_qubits) {
    std::string label(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index >> q & 1) {
            label[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return label;
}

std::size_t basis_index(std::string_view label) {
    if (label.empty() || label.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("bad basis label '" + std::string(label) + "'");
    }
    std::size_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad basis label '" + std::string(label) + "'");
        }
        index = index * 2 + static_cast<std::size_t>(c == '1');
    }
    return index;
}

StateVector StateVector::zero(int n_qubits) {
    return basis(n_qubits, 0);
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    check_qubit_count(n_qubits);
    std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index " + std::to_string(index) +
                                    " out of range for " + std::to_string(n_qubits) +
                                    " qubits");
    }
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Amplitude> amps) {
    check_qubit_count(n_qubits);
    if (amps.size() != std::size_t{1} << n_qubits) {
        throw std::invalid_argument("amplitude vector has length " +
                                    std::to_string(amps.size()) + ", expected 2^" +
                                    std::to_string(n_qubits));
    }
    double norm_sq = 0.0;
    for (const Amplitude& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude in state vector");
        }
        norm_sq += std::norm(a);
    }
    if (std::abs(norm_sq - 1.0) > kStateTol) {
        throw std::invalid_argument("state vector not normalized: sum |amp|^2 = " +
                                    std::to_string(norm_sq));
    }
    return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const {
    double norm_sq = 0.0;
    for (const Amplitude& a : amps_) {
        norm_sq += std::norm(a);
    }
    return std::sqrt(norm_sq);
}

Distribution Distribution::from_probs(int n_qubits, std::vector<double> probs) {
    check_qubit_count(n_qubits);
    if (probs.size() != std::size_t{1} << n_qubits) {
        throw std::invalid_argument("probability vector has length " +
                                    std::to_string(probs.size()) + ", expected 2^" +
                                    std::to_string(n_qubits));
    }
    double total = 0.0;
    for (double& p : probs) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("non-finite probability");
        }
        // Absorb pure rounding excursions, reject anything real.
        if (p < 0.0) {
            if (p < -kStructuralTol) {
                throw std::invalid_argument("negative probability " + std::to_string(p));
            }
            p = 0.0;
        }
        if (p > 1.0) {
            if (p > 1.0 + kStructuralTol) {
                throw std::invalid_argument("probability " + std::to_string(p) + " > 1");
            }
            p = 1.0;
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kStateTol) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(total));
    }
    return Distribution(n_qubits, std::move(probs));
}

double Distribution::prob(std::string_view label) const {
    std::size_t index = basis_index(label);
    if (label.size() != static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("label '" + std::string(label) + "' is not " +
                                    std::to_string(n_qubits_) + " bits");
    }
    return probs_[index];
}

Distribution measure_probs(const StateVector& state) {
    std::vector<double> probs(state.dim());
    double total = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        probs[i] = std::norm(state.amp(i));
        total += probs[i];
    }
    if (std::abs(total - 1.0) > kStateTol) {
        throw std::invalid_argument("cannot measure unnormalized state, norm^2 = " +
                                    std::to_string(total));
    }
    return Distribution::from_probs(state.n_qubits(), std::move(probs));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("dimension mismatch: " +
                                    std::to_string(a.n_qubits()) + " vs " +
                                    std::to_string(b.n_qubits()) + " qubits");
    }
    // The unit scalar minimizing ||a - c b|| is the phase of <b|a>;
    // evaluate the residual directly rather than through the
    // 2 - 2|<b|a>| closed form, which cancels catastrophically right
    // where tight tolerances matter.
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(b.amp(i)) * a.amp(i);
    }
    const Amplitude c =
        std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude{1.0, 0.0};
    double dist_sq = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        dist_sq += std::norm(a.amp(i) - c * b.amp(i));
    }
    return std::sqrt(dist_sq) <= tol;
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        return false;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amp(i) - b.amp(i)) > tol) {
            return false;
        }
    }
    return true;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("dimension mismatch in fidelity");
    }
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a.amp(i)) * b.amp(i);
    }
    return std::norm(overlap);
}

} // namespace qsdc
