#include "qsdc/gates.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

constexpr Amplitude kI{0.0, 1.0};

int arity_from_matrix_size(std::size_t size) {
    if (size == 4) return 1;
    if (size == 16) return 2;
    throw std::invalid_argument("gate matrix must be 2x2 or 4x4, got " +
                                std::to_string(size) + " entries");
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace

Gate::Gate(std::string name, std::vector<Amplitude> matrix)
    : name_(std::move(name)),
      arity_(arity_from_matrix_size(matrix.size())),
      matrix_(std::move(matrix)) {
    const std::size_t d = dim();
    for (const Amplitude& a : matrix_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite entry in gate '" + name_ + "'");
        }
    }
    // ||U^dag U - I||_max <= 1e-12
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude dot = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                dot += std::conj(entry(k, r)) * entry(k, c);
            }
            Amplitude expected = (r == c) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(dot - expected) > kStructuralTol) {
                throw std::invalid_argument("gate '" + name_ + "' is not unitary");
            }
        }
    }
}

bool Gate::operator==(const Gate& other) const {
    return name_ == other.name_ && matrix_ == other.matrix_;
}

const Gate& Gate::named(GateId id) {
    static const double s = 1.0 / std::sqrt(2.0);
    static const std::array<Gate, 10> table = {
        Gate("I", {1, 0, 0, 1}),
        Gate("X", {0, 1, 1, 0}),
        Gate("Y", {0, -kI, kI, 0}),
        Gate("Z", {1, 0, 0, -1}),
        Gate("S", {1, 0, 0, kI}),
        Gate("Sdg", {1, 0, 0, -kI}),
        Gate("H", {s, s, s, -s}),
        Gate("SX", {0.5 * (1.0 + kI), 0.5 * (1.0 - kI),
                    0.5 * (1.0 - kI), 0.5 * (1.0 + kI)}),
        Gate("SXdg", {0.5 * (1.0 - kI), 0.5 * (1.0 + kI),
                      0.5 * (1.0 + kI), 0.5 * (1.0 - kI)}),
        // Local basis bit(targets[0]) = control, bit(targets[1]) = target.
        Gate("CNOT", {1, 0, 0, 0,
                      0, 0, 0, 1,
                      0, 0, 1, 0,
                      0, 1, 0, 0}),
    };
    return table[static_cast<std::size_t>(id)];
}

std::optional<GateId> parse_gate_id(std::string_view name) {
    const std::string n = lower(name);
    if (n == "i") return GateId::I;
    if (n == "x") return GateId::X;
    if (n == "y") return GateId::Y;
    if (n == "z") return GateId::Z;
    if (n == "s") return GateId::S;
    if (n == "sdg") return GateId::Sdg;
    if (n == "h") return GateId::H;
    if (n == "sx") return GateId::SX;
    if (n == "sxdg") return GateId::SXdg;
    if (n == "cnot" || n == "cx") return GateId::CNOT;
    return std::nullopt;
}

std::string_view gate_name(GateId id) {
    return Gate::named(id).name();
}

std::vector<Gate> single_qubit_gates() {
    return {Gate::named(GateId::I),  Gate::named(GateId::X),
            Gate::named(GateId::Y),  Gate::named(GateId::Z),
            Gate::named(GateId::S),  Gate::named(GateId::Sdg),
            Gate::named(GateId::H),  Gate::named(GateId::SX),
            Gate::named(GateId::SXdg)};
}

StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::span<const int> targets) {
    const int k = gate.arity();
    if (static_cast<int>(targets.size()) != k) {
        throw std::invalid_argument("gate '" + gate.name() + "' acts on " +
                                    std::to_string(k) + " qubit(s), got " +
                                    std::to_string(targets.size()) + " target(s)");
    }
    std::size_t target_mask = 0;
    for (int t : targets) {
        if (t < 0 || t >= state.n_qubits()) {
            throw std::invalid_argument("target qubit " + std::to_string(t) +
                                        " out of range for " +
                                        std::to_string(state.n_qubits()) + " qubits");
        }
        const std::size_t bit = std::size_t{1} << t;
        if (target_mask & bit) {
            throw std::invalid_argument("duplicate target qubit " + std::to_string(t));
        }
        target_mask |= bit;
    }

    const std::size_t block = gate.dim();
    std::vector<Amplitude> out(state.amplitudes());
    std::array<std::size_t, 4> idx{};
    std::array<Amplitude, 4> in{};
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) {
            continue; // handled as part of its block
        }
        for (std::size_t local = 0; local < block; ++local) {
            std::size_t j = base;
            for (int b = 0; b < k; ++b) {
                if (local >> b & 1) {
                    j |= std::size_t{1} << targets[b];
                }
            }
            idx[local] = j;
            in[local] = out[j];
        }
        for (std::size_t row = 0; row < block; ++row) {
            Amplitude acc = 0.0;
            for (std::size_t col = 0; col < block; ++col) {
                acc += gate.entry(row, col) * in[col];
            }
            out[idx[row]] = acc;
        }
    }
    return StateVector::from_amplitudes(state.n_qubits(), std::move(out));
}

StateVector apply_gate(const StateVector& state, const Gate& gate,
                       std::initializer_list<int> targets) {
    return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

} // namespace qsdc
