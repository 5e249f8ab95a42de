#pragma once

#include <array>
#include <vector>

#include "qsdc/statevector.hpp"

namespace qsdc {

/// Readout-level classical channel: each qubit's measured bit flips
/// independently per shot with probability flip_prob[q]. Acts on
/// distributions only, so state phases can never leak through it.
class NoiseModel {
public:
    explicit NoiseModel(std::vector<double> flip_probs); // each in [0, 0.5)

    int n_qubits() const { return static_cast<int>(flip_.size()); }
    double flip_prob(int qubit) const { return flip_[qubit]; }
    const std::vector<double>& flip_probs() const { return flip_; }

    bool operator==(const NoiseModel&) const = default;

private:
    std::vector<double> flip_;
};

/// Exact convolution of `dist` with the independent bit-flip channels.
/// Stochastic: total probability is preserved.
Distribution apply_noise(const Distribution& dist, const NoiseModel& model);

struct CalibrationResult {
    NoiseModel model;
    double predicted_diagonal; // clean-protocol correct-string probability
    double rms_residual;       // against the four targets
};

/// Fits one (eps0, eps1) pair to the clean protocol's observed
/// correct-string frequencies (order 00, 01, 10, 11). The diagonal
/// determines only the product (1-eps0)(1-eps1), so the fit splits it
/// symmetrically: eps0 = eps1 = 1 - sqrt(mean(targets)). Targets must
/// lie in (0.5, 1].
CalibrationResult calibrate(const std::array<double, 4>& target_diag);

} // namespace qsdc
