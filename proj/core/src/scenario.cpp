#include "qsdc/scenario.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "qsdc/report.hpp"

namespace qsdc {

using nlohmann::json;

std::string_view format_name(OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Both: return "both";
    }
    throw std::logic_error("bad OutputFormat value");
}

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "both") return OutputFormat::Both;
    throw std::invalid_argument("unknown output format '" + std::string(name) +
                                "', expected json|csv|both");
}

std::string scenario_to_json(const Scenario& scenario) {
    json doc;
    doc["schema"] = kScenarioSchema;
    doc["messages"] = json::array();
    for (const Message& m : scenario.messages) {
        doc["messages"].push_back(m.label());
    }
    doc["attacks"] = json::array();
    for (const AttackSpec& a : scenario.attacks) {
        doc["attacks"].push_back(a.str());
    }
    if (scenario.noise) {
        doc["noise"] = {{"epsilon0", scenario.noise->flip_prob(0)},
                        {"epsilon1", scenario.noise->flip_prob(1)}};
    } else {
        doc["noise"] = nullptr;
    }
    doc["shots"] = scenario.shots;
    doc["seed"] = scenario.seed;
    doc["out_dir"] = scenario.out_dir;
    doc["format"] = format_name(scenario.format);
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(std::string_view text) {
    json doc = json::parse(text);
    if (doc.value("schema", "") != kScenarioSchema) {
        throw std::invalid_argument("scenario file has schema '" +
                                    doc.value("schema", "") + "', expected '" +
                                    std::string(kScenarioSchema) + "'");
    }
    Scenario scenario;
    scenario.messages.clear();
    for (const auto& m : doc.at("messages")) {
        scenario.messages.push_back(Message::parse(m.get<std::string>()));
    }
    if (scenario.messages.empty()) {
        throw std::invalid_argument("scenario lists no messages");
    }
    for (const auto& a : doc.at("attacks")) {
        scenario.attacks.push_back(AttackSpec::parse(a.get<std::string>()));
    }
    if (doc.contains("noise") && !doc.at("noise").is_null()) {
        scenario.noise = NoiseModel({doc.at("noise").at("epsilon0").get<double>(),
                                     doc.at("noise").at("epsilon1").get<double>()});
    }
    scenario.shots = doc.at("shots").get<std::uint64_t>();
    if (scenario.shots == 0) {
        throw std::invalid_argument("scenario shot count must be >= 1");
    }
    scenario.seed = doc.at("seed").get<std::uint64_t>();
    scenario.out_dir = doc.value("out_dir", ".");
    scenario.format = parse_format(doc.value("format", "both"));
    return scenario;
}

} // namespace qsdc
