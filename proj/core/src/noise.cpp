#include "qsdc/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

NoiseModel::NoiseModel(std::vector<double> flip_probs) : flip_(std::move(flip_probs)) {
    if (flip_.empty() || flip_.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("noise model needs 1.." +
                                    std::to_string(kMaxQubits) + " qubits");
    }
    for (double eps : flip_) {
        if (!(eps >= 0.0 && eps < 0.5)) {
            throw std::invalid_argument("flip probability " + std::to_string(eps) +
                                        " outside [0, 0.5)");
        }
    }
}

Distribution apply_noise(const Distribution& dist, const NoiseModel& model) {
    if (model.n_qubits() != dist.n_qubits()) {
        throw std::invalid_argument("noise model covers " +
                                    std::to_string(model.n_qubits()) +
                                    " qubits, distribution has " +
                                    std::to_string(dist.n_qubits()));
    }
    // Convolve one qubit at a time; exact and O(n 2^n).
    std::vector<double> probs = dist.probs();
    for (int q = 0; q < model.n_qubits(); ++q) {
        const double eps = model.flip_prob(q);
        if (eps == 0.0) {
            continue;
        }
        const std::size_t bit = std::size_t{1} << q;
        std::vector<double> next(probs.size());
        for (std::size_t b = 0; b < probs.size(); ++b) {
            next[b] = (1.0 - eps) * probs[b] + eps * probs[b ^ bit];
        }
        probs = std::move(next);
    }
    return Distribution::from_probs(dist.n_qubits(), std::move(probs));
}

CalibrationResult calibrate(const std::array<double, 4>& target_diag) {
    double mean = 0.0;
    for (double t : target_diag) {
        if (!(t > 0.5 && t <= 1.0)) {
            throw std::invalid_argument(
                "correct-string frequency " + std::to_string(t) +
                " infeasible for a sub-50% flip channel, expected (0.5, 1]");
        }
        mean += t;
    }
    mean /= 4.0;
    // The clean protocol's correct-string probability is
    // (1-eps0)(1-eps1) for every message; split the fitted product
    // symmetrically.
    const double eps = 1.0 - std::sqrt(mean);
    double ss = 0.0;
    for (double t : target_diag) {
        ss += (mean - t) * (mean - t);
    }
    return CalibrationResult{NoiseModel({eps, eps}), mean, std::sqrt(ss / 4.0)};
}

} // namespace qsdc
