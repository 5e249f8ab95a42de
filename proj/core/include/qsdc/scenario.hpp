#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/attack.hpp"
#include "qsdc/circuit.hpp"
#include "qsdc/noise.hpp"

namespace qsdc {

enum class OutputFormat { Json, Csv, Both };

std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

/// Everything one experiment needs: messages, attacks, optional
/// readout noise, shot count, seed, and output routing. Message i of a
/// multi-message run samples with seed + i (canonical order).
struct Scenario {
    std::vector<Message> messages{Message::all().begin(), Message::all().end()};
    std::vector<AttackSpec> attacks;
    std::optional<NoiseModel> noise;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    OutputFormat format = OutputFormat::Both;

    bool operator==(const Scenario&) const = default;
};

/// JSON round trip; scenario_to_json(scenario_from_json(s)) re-parses
/// to an identical Scenario.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(std::string_view text);

} // namespace qsdc
