#include "qsdc/circuit.hpp"

#include <cctype>
#include <stdexcept>

namespace qsdc {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace

std::string_view node_name(Node node) {
    switch (node) {
    case Node::Source: return "source";
    case Node::Alice: return "alice";
    case Node::Bob: return "bob";
    }
    throw std::logic_error("bad Node value");
}

Node parse_node(std::string_view name) {
    const std::string n = lower(name);
    if (n == "source" || n == "entanglementsource") return Node::Source;
    if (n == "alice") return Node::Alice;
    if (n == "bob") return Node::Bob;
    throw std::invalid_argument("unknown node '" + std::string(name) + "'");
}

std::string_view position_name(ChainPosition pos) {
    return pos == ChainPosition::Begin ? "begin" : "end";
}

ChainPosition parse_position(std::string_view name) {
    const std::string n = lower(name);
    if (n == "begin") return ChainPosition::Begin;
    if (n == "end") return ChainPosition::End;
    throw std::invalid_argument("unknown chain position '" + std::string(name) + "'");
}

std::string Message::label() const {
    return std::string{static_cast<char>('0' + x), static_cast<char>('0' + y)};
}

Message Message::parse(std::string_view label) {
    if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
        (label[1] != '0' && label[1] != '1')) {
        throw std::invalid_argument("bad message '" + std::string(label) +
                                    "', expected one of 00/01/10/11");
    }
    return Message{label[0] - '0', label[1] - '0'};
}

const std::array<Message, 4>& Message::all() {
    static const std::array<Message, 4> messages = {
        Message{0, 0}, Message{0, 1}, Message{1, 0}, Message{1, 1}};
    return messages;
}

NodeChain& ProtocolCircuit::chain(Node node) {
    switch (node) {
    case Node::Source: return source;
    case Node::Alice: return alice;
    case Node::Bob: return bob;
    }
    throw std::logic_error("bad Node value");
}

const NodeChain& ProtocolCircuit::chain(Node node) const {
    return const_cast<ProtocolCircuit*>(this)->chain(node);
}

StateVector simulate(const ProtocolCircuit& circuit) {
    StateVector state = StateVector::zero(2);
    for (const NodeChain* chain : {&circuit.source, &circuit.alice, &circuit.bob}) {
        for (const CircuitOp& op : chain->ops) {
            state = apply_gate(state, op.gate, op.targets);
        }
    }
    return state;
}

} // namespace qsdc
