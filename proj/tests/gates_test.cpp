#include "doctest.h"

#include <cmath>
#include <random>

#include "qsdc/gates.hpp"
#include "test_util.hpp"

using namespace qsdc;
using namespace testutil;

namespace {

double unitarity_defect(const Gate& g) {
    const std::size_t d = g.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude dot = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                dot += std::conj(g.entry(k, r)) * g.entry(k, c);
            }
            const Amplitude expected = r == c ? Amplitude{1, 0} : Amplitude{0, 0};
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("canonical matrices") {
    const Gate& x = Gate::named(GateId::X);
    CHECK(x.entry(0, 1) == Amplitude{1, 0});
    CHECK(x.entry(0, 0) == Amplitude{0, 0});

    const Gate& z = Gate::named(GateId::Z);
    CHECK(z.entry(1, 1) == Amplitude{-1, 0});

    const Gate& s = Gate::named(GateId::S);
    CHECK(s.entry(1, 1) == Amplitude{0, 1});

    const Gate& h = Gate::named(GateId::H);
    CHECK(h.entry(1, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));

    const Gate& sx = Gate::named(GateId::SX);
    CHECK(sx.entry(0, 0) == Amplitude{0.5, 0.5});
    CHECK(sx.entry(0, 1) == Amplitude{0.5, -0.5});

    // SX squared is X.
    const Mat2 m = mat2(sx);
    const Amplitude top = m[0] * m[0] + m[1] * m[2];
    const Amplitude off = m[0] * m[1] + m[1] * m[3];
    CHECK(std::abs(top) < 1e-12);
    CHECK(std::abs(off - Amplitude{1, 0}) < 1e-12);

    CHECK(Gate::named(GateId::CNOT).arity() == 2);
}

TEST_CASE("every named gate is unitary to 1e-12") {
    for (const Gate& g : single_qubit_gates()) {
        CHECK(unitarity_defect(g) <= 1e-12);
    }
    CHECK(unitarity_defect(Gate::named(GateId::CNOT)) <= 1e-12);
}

TEST_CASE("non-unitary matrices are rejected") {
    CHECK_THROWS_AS(Gate("bad", {1, 0, 0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Gate("bad", {1, 0, 0}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Gate("bad", {inf, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("gate name parsing") {
    CHECK(*parse_gate_id("x") == GateId::X);
    CHECK(*parse_gate_id("X") == GateId::X);
    CHECK(*parse_gate_id("SDG") == GateId::Sdg);
    CHECK(*parse_gate_id("sx") == GateId::SX);
    CHECK(*parse_gate_id("sxdg") == GateId::SXdg);
    CHECK(*parse_gate_id("cx") == GateId::CNOT);
    CHECK_FALSE(parse_gate_id("t").has_value());
    CHECK(gate_name(GateId::SXdg) == "SXdg");
    CHECK(single_qubit_gates().size() == 9);
}

TEST_CASE("apply_gate basics") {
    const StateVector one = apply_gate(StateVector::zero(1), Gate::named(GateId::X), {0});
    CHECK(one.amp(1) == Amplitude{1, 0});

    const StateVector plus = apply_gate(StateVector::zero(1), Gate::named(GateId::H), {0});
    CHECK(plus.amp(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(plus.amp(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    // S on qubit 0 of the Bell pair adds a phase to the |11> branch.
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector bell = sv2({s, 0, 0, s});
    const StateVector phased = apply_gate(bell, Gate::named(GateId::S), {0});
    CHECK(std::abs(phased.amp(0) - Amplitude{s, 0}) < 1e-12);
    CHECK(std::abs(phased.amp(3) - Amplitude{0, s}) < 1e-12);
    // input untouched
    CHECK(bell.amp(3) == Amplitude{s, 0});
}

TEST_CASE("apply_gate rejects bad targets") {
    const StateVector state = StateVector::zero(2);
    CHECK_THROWS_AS(apply_gate(state, Gate::named(GateId::X), {0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(state, Gate::named(GateId::CNOT), {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(state, Gate::named(GateId::X), {2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(state, Gate::named(GateId::X), {-1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(state, Gate::named(GateId::CNOT), {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("random circuits preserve the norm") {
    std::mt19937_64 rng(7);
    const std::vector<Gate> gates = single_qubit_gates();
    StateVector state = StateVector::zero(3);
    for (int step = 0; step < 200; ++step) {
        const Gate& g = gates[rng() % gates.size()];
        const int target = static_cast<int>(rng() % 3);
        state = apply_gate(state, g, {target});
        CHECK(std::abs(state.norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("composition matches the one-shot product") {
    // apply A then B == apply (B*A) as a single gate, for every pair of
    // named single-qubit gates.
    const std::vector<Gate> gates = single_qubit_gates();
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector start = sv2({s, 0, 0, s});
    for (const Gate& a : gates) {
        for (const Gate& b : gates) {
            const Mat2 ma = mat2(a);
            const Mat2 mb = mat2(b);
            Mat2 ba{};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    ba[static_cast<std::size_t>(r * 2 + c)] =
                        mb[static_cast<std::size_t>(r * 2)] * ma[static_cast<std::size_t>(c)] +
                        mb[static_cast<std::size_t>(r * 2 + 1)] *
                            ma[static_cast<std::size_t>(2 + c)];
            const Gate fused("fused", {ba[0], ba[1], ba[2], ba[3]});
            const StateVector stepped =
                apply_gate(apply_gate(start, a, {0}), b, {0});
            const StateVector once = apply_gate(start, fused, {0});
            CHECK(max_amp_diff(stepped, once) <= 1e-10);
        }
    }

    // CNOT is an involution.
    const StateVector v = sv2({0.5, 0.5, 0.5, 0.5});
    const StateVector back = apply_gate(
        apply_gate(v, Gate::named(GateId::CNOT), {0, 1}), Gate::named(GateId::CNOT), {0, 1});
    CHECK(max_amp_diff(v, back) <= 1e-12);
}

TEST_CASE("engine agrees with the naive matrix oracle") {
    // Random chains of named gates on two qubits, checked against full
    // 4x4 matrix arithmetic.
    std::mt19937_64 rng(11);
    const std::vector<Gate> gates = single_qubit_gates();
    for (int trial = 0; trial < 25; ++trial) {
        StateVector engine = StateVector::zero(2);
        Vec4 naive{1, 0, 0, 0};
        for (int step = 0; step < 8; ++step) {
            if (rng() % 4 == 0) {
                engine = apply_gate(engine, Gate::named(GateId::CNOT), {0, 1});
                naive = matvec(cnot_q0_to_q1(), naive);
            } else {
                const Gate& g = gates[rng() % gates.size()];
                const int target = static_cast<int>(rng() % 2);
                engine = apply_gate(engine, g, {target});
                naive = matvec(target == 0 ? on_q0(mat2(g)) : on_q1(mat2(g)), naive);
            }
        }
        CHECK(max_amp_diff(engine, to_state(naive)) <= 1e-10);
    }
}
