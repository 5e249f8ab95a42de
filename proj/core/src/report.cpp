#include "qsdc/report.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "qsdc/version.hpp"

namespace qsdc {

using nlohmann::json;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

json distribution_to_json(const Distribution& dist) {
    json out = json::object();
    for (std::size_t b = 0; b < dist.size(); ++b) {
        out[basis_label(b, dist.n_qubits())] = dist.prob(b);
    }
    return out;
}

json counts_entry_to_json(const Counts& counts) {
    json out = json::object();
    for (const auto& [label, c] : counts.to_map()) {
        out[label] = c;
    }
    return out;
}

json state_to_json(const StateVector& state) {
    json out = json::array();
    for (std::size_t b = 0; b < state.dim(); ++b) {
        out.push_back({{"basis", basis_label(b, state.n_qubits())},
                       {"re", state.amp(b).real()},
                       {"im", state.amp(b).imag()}});
    }
    return out;
}

json amplitude_to_json(const Amplitude& a) {
    return {{"re", a.real()}, {"im", a.imag()}};
}

} // namespace

RunReport execute(const Scenario& scenario) {
    RunReport report;
    report.scenario = scenario;
    std::map<Message, Counts> counts;
    for (const Message& message : scenario.messages) {
        const std::uint64_t seed =
            scenario.seed + static_cast<std::uint64_t>(message.index());
        RunResult result = run_protocol(build_protocol(message), scenario.attacks,
                                        scenario.noise, scenario.shots, seed);
        counts.emplace(message, result.counts);
        report.results.emplace(message, std::move(result));
    }
    report.rates = error_rates(counts);
    return report;
}

std::string run_report_json(const RunReport& report) {
    json doc;
    doc["schema"] = kReportSchema;
    doc["version"] = kVersion;
    doc["seed"] = report.scenario.seed;
    doc["scenario"] = json::parse(scenario_to_json(report.scenario));
    json results = json::object();
    for (const auto& [message, result] : report.results) {
        json entry;
        entry["seed"] = report.scenario.seed + static_cast<std::uint64_t>(message.index());
        entry["final_state"] = state_to_json(result.final_state);
        entry["ideal"] = distribution_to_json(result.ideal);
        entry["counts"] = counts_entry_to_json(result.counts);
        entry["frequencies"] = distribution_to_json(result.counts.frequencies());
        results[message.label()] = std::move(entry);
    }
    doc["results"] = std::move(results);
    json rates = json::object();
    for (const auto& [message, r] : report.rates) {
        rates[message.label()] = {{"alice_error", r.alice_error},
                                  {"bob_error", r.bob_error}};
    }
    doc["error_rates"] = std::move(rates);
    return doc.dump(2) + "\n";
}

std::string frequency_csv(const RunReport& report) {
    std::string csv = "observed";
    for (const auto& [message, result] : report.results) {
        csv += "," + message.label();
    }
    csv += "\n";
    for (std::size_t b = 0; b < 4; ++b) {
        csv += basis_label(b, 2);
        for (const auto& [message, result] : report.results) {
            const Distribution freq = result.counts.frequencies();
            csv += "," + num(100.0 * freq.prob(b));
        }
        csv += "\n";
    }
    return csv;
}

std::string error_rates_csv(const RunReport& report) {
    std::string csv = "message,alice_error_pct,bob_error_pct\n";
    for (const auto& [message, r] : report.rates) {
        csv += message.label() + "," + num(100.0 * r.alice_error) + "," +
               num(100.0 * r.bob_error) + "\n";
    }
    return csv;
}

std::string statevectors_csv(const RunReport& report) {
    std::string csv = "message,basis,re,im\n";
    for (const auto& [message, result] : report.results) {
        for (std::size_t b = 0; b < result.final_state.dim(); ++b) {
            csv += message.label() + "," + basis_label(b, 2) + "," +
                   num(result.final_state.amp(b).real()) + "," +
                   num(result.final_state.amp(b).imag()) + "\n";
        }
    }
    return csv;
}

std::string classification_json(const AttackClassification& classification,
                                std::span<const AttackSpec> attacks) {
    json doc;
    doc["schema"] = kClassificationSchema;
    doc["version"] = kVersion;
    doc["attacks"] = json::array();
    for (const AttackSpec& a : attacks) {
        doc["attacks"].push_back(a.str());
    }
    switch (classification.kind) {
    case AttackClassification::Kind::Clean:
        doc["type"] = "clean";
        break;
    case AttackClassification::Kind::Bijection: {
        doc["type"] = "bijection";
        const BijectionClassification& b = *classification.bijection;
        json f = json::object();
        json phases = json::object();
        for (const Message& m : Message::all()) {
            f[m.label()] = basis_label(static_cast<std::size_t>(b.f[m.index()]), 2);
            phases[m.label()] = amplitude_to_json(b.phases[m.index()]);
        }
        doc["f"] = std::move(f);
        doc["phases"] = std::move(phases);
        break;
    }
    case AttackClassification::Kind::Scrambling: {
        doc["type"] = "scrambling";
        const ScramblingClassification& s = *classification.scrambling;
        json success = json::object();
        json amplitudes = json::object();
        for (const Message& m : Message::all()) {
            success[m.label()] = s.success_prob[m.index()];
            json row = json::object();
            for (std::size_t b = 0; b < 4; ++b) {
                row[basis_label(b, 2)] = amplitude_to_json(s.amplitudes[m.index()][b]);
            }
            amplitudes[m.label()] = std::move(row);
        }
        doc["success_prob"] = std::move(success);
        doc["amplitudes"] = std::move(amplitudes);
        break;
    }
    }
    return doc.dump(2) + "\n";
}

std::string classes_json(const std::vector<EquivalenceClass>& classes,
                         Granularity granularity) {
    json doc;
    doc["schema"] = kClassesSchema;
    doc["version"] = kVersion;
    doc["granularity"] =
        granularity == Granularity::VectorUpToPhase ? "vector" : "distribution";
    json out = json::array();
    for (const EquivalenceClass& cls : classes) {
        json members = json::array();
        for (const AttackSpec& member : cls.members) {
            members.push_back(member.str());
        }
        out.push_back({{"key", cls.key}, {"members", std::move(members)}});
    }
    doc["classes"] = std::move(out);
    return doc.dump(2) + "\n";
}

std::string match_json(const std::vector<MatchResult>& results) {
    json doc;
    doc["schema"] = kMatchSchema;
    doc["version"] = kVersion;
    json ranking = json::array();
    for (const MatchResult& r : results) {
        json attacks = json::array();
        for (const AttackSpec& a : r.attacks) {
            attacks.push_back(a.str());
        }
        ranking.push_back({{"rank", r.rank},
                           {"attacks", std::move(attacks)},
                           {"mean_tv", r.mean_tv}});
    }
    doc["ranking"] = std::move(ranking);
    return doc.dump(2) + "\n";
}

std::string calibration_json(const CalibrationResult& fit,
                             const std::array<double, 4>& targets) {
    json doc;
    doc["schema"] = kCalibrationSchema;
    doc["version"] = kVersion;
    json target = json::object();
    for (const Message& m : Message::all()) {
        target[m.label()] = targets[m.index()];
    }
    doc["target_diagonal"] = std::move(target);
    doc["epsilon0"] = fit.model.flip_prob(0);
    doc["epsilon1"] = fit.model.flip_prob(1);
    doc["predicted_diagonal"] = fit.predicted_diagonal;
    doc["rms_residual"] = fit.rms_residual;
    return doc.dump(2) + "\n";
}

std::string counts_to_json(const std::map<Message, Counts>& counts) {
    json doc;
    doc["schema"] = kCountsSchema;
    json per_message = json::object();
    for (const auto& [message, c] : counts) {
        per_message[message.label()] = counts_entry_to_json(c);
    }
    doc["counts"] = std::move(per_message);
    return doc.dump(2) + "\n";
}

std::map<Message, Counts> counts_from_json(std::string_view text) {
    json doc = json::parse(text);
    if (doc.value("schema", "") != kCountsSchema) {
        throw std::invalid_argument("counts file has schema '" +
                                    doc.value("schema", "") + "', expected '" +
                                    std::string(kCountsSchema) + "'");
    }
    std::map<Message, Counts> out;
    for (const auto& [label, entry] : doc.at("counts").items()) {
        std::map<std::string, std::uint64_t> m;
        for (const auto& [basis, c] : entry.items()) {
            m[basis] = c.get<std::uint64_t>();
        }
        out.emplace(Message::parse(label), Counts::from_map(2, m));
    }
    if (out.empty()) {
        throw std::invalid_argument("counts file lists no messages");
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("short write to '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace qsdc
