#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/gates.hpp"
#include "qsdc/statevector.hpp"

namespace qsdc {

/// The three network nodes of the superdense-coding chain.
enum class Node { Source, Alice, Bob };

enum class ChainPosition { Begin, End };

std::string_view node_name(Node node);             // "source" / "alice" / "bob"
Node parse_node(std::string_view name);            // case-insensitive
std::string_view position_name(ChainPosition pos); // "begin" / "end"
ChainPosition parse_position(std::string_view name);

/// Two-bit message xy: x is Bob's intended readout (qubit 1), y is
/// Alice's (qubit 0). Displayed as the string "xy".
struct Message {
    int x = 0;
    int y = 0;

    /// Basis index of |xy> under the q1q0 convention.
    int index() const { return x * 2 + y; }
    std::string label() const;

    static Message parse(std::string_view label);
    static const std::array<Message, 4>& all(); // 00, 01, 10, 11

    auto operator<=>(const Message&) const = default;
};

struct CircuitOp {
    Gate gate;
    std::vector<int> targets;

    bool operator==(const CircuitOp&) const = default;
};

/// Ordered gate sequence run by one node's automation.
struct NodeChain {
    Node node;
    std::vector<CircuitOp> ops;

    bool operator==(const NodeChain&) const = default;
};

/// Full pipeline for one message: entanglement source, then Alice's
/// encoding, then Bob's decode.
struct ProtocolCircuit {
    Message message;
    NodeChain source;
    NodeChain alice;
    NodeChain bob;

    NodeChain& chain(Node node);
    const NodeChain& chain(Node node) const;

    bool operator==(const ProtocolCircuit&) const = default;
};

/// Applies the three chains in order to |00>.
StateVector simulate(const ProtocolCircuit& circuit);

} // namespace qsdc
