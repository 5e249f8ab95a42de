#include "qsdc/protocol.hpp"

namespace qsdc {

ProtocolCircuit build_protocol(Message message) {
    ProtocolCircuit circuit;
    circuit.message = message;
    circuit.source = NodeChain{
        Node::Source,
        {CircuitOp{Gate::named(GateId::H), {0}},
         CircuitOp{Gate::named(GateId::CNOT), {0, 1}}}};
    circuit.alice = NodeChain{Node::Alice, {}};
    if (message.x == 1) {
        circuit.alice.ops.push_back(CircuitOp{Gate::named(GateId::X), {0}});
    }
    if (message.y == 1) {
        circuit.alice.ops.push_back(CircuitOp{Gate::named(GateId::Z), {0}});
    }
    circuit.bob = NodeChain{
        Node::Bob,
        {CircuitOp{Gate::named(GateId::CNOT), {0, 1}},
         CircuitOp{Gate::named(GateId::H), {0}}}};
    return circuit;
}

StateVector source_state() {
    StateVector state = StateVector::zero(2);
    state = apply_gate(state, Gate::named(GateId::H), {0});
    return apply_gate(state, Gate::named(GateId::CNOT), {0, 1});
}

std::array<StateVector, 4> hacked_final_states(std::span<const AttackSpec> attacks) {
    std::array<StateVector, 4> finals = {
        StateVector::zero(2), StateVector::zero(2),
        StateVector::zero(2), StateVector::zero(2)};
    for (const Message& message : Message::all()) {
        finals[static_cast<std::size_t>(message.index())] =
            simulate(inject(build_protocol(message), attacks));
    }
    return finals;
}

RunResult run_protocol(const ProtocolCircuit& circuit,
                       std::span<const AttackSpec> attacks,
                       const std::optional<NoiseModel>& noise,
                       std::uint64_t shots, std::uint64_t seed) {
    StateVector final_state = simulate(inject(circuit, attacks));
    Distribution ideal = measure_probs(final_state);
    Distribution readout = noise ? apply_noise(ideal, *noise) : ideal;
    Counts counts = sample_distribution(readout, shots, seed);
    return RunResult{std::move(final_state), std::move(ideal), std::move(counts)};
}

} // namespace qsdc
