// qsdc — scenario runner for the superdense-coding attack simulator.
//
// Subcommands: run, classify, enumerate, calibrate, match.
// Exit codes: 0 success, 2 configuration/parse failure, 3 simulation
// precondition failure.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsdc/forensics.hpp"
#include "qsdc/report.hpp"
#include "qsdc/scenario.hpp"
#include "qsdc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSimulation = 3;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

qsdc::NoiseModel parse_noise(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw std::invalid_argument("--noise expects 'e0,e1', got '" + text + "'");
    }
    return qsdc::NoiseModel({std::stod(parts[0]), std::stod(parts[1])});
}

std::vector<qsdc::AttackSpec> parse_attacks(const std::vector<std::string>& texts) {
    std::vector<qsdc::AttackSpec> attacks;
    for (const std::string& text : texts) {
        if (text.empty()) {
            continue; // explicit empty spec means "no attack"
        }
        attacks.push_back(qsdc::AttackSpec::parse(text));
    }
    return attacks;
}

std::vector<qsdc::AttackSpec> parse_hypothesis(const std::string& text) {
    if (text.empty() || text == "clean") {
        return {};
    }
    return parse_attacks(split(text, '+'));
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        qsdc::write_file_atomic(out_path, content);
    }
}

struct RunArgs {
    std::vector<std::string> messages;
    std::vector<std::string> attacks;
    std::string noise;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "both";
    std::string scenario_file;
};

qsdc::Scenario build_scenario(const RunArgs& args, const CLI::App* cmd) {
    qsdc::Scenario scenario;
    if (!args.scenario_file.empty()) {
        scenario = qsdc::scenario_from_json(read_file(args.scenario_file));
    }
    // Explicit flags override the scenario file.
    if (cmd->count("--message") > 0) {
        scenario.messages.clear();
        for (const std::string& m : args.messages) {
            scenario.messages.push_back(qsdc::Message::parse(m));
        }
    }
    if (cmd->count("--attack") > 0) {
        scenario.attacks = parse_attacks(args.attacks);
    }
    if (cmd->count("--noise") > 0) {
        scenario.noise = parse_noise(args.noise);
    }
    if (cmd->count("--shots") > 0) scenario.shots = args.shots;
    if (cmd->count("--seed") > 0) scenario.seed = args.seed;
    if (cmd->count("--out") > 0) scenario.out_dir = args.out_dir;
    if (cmd->count("--format") > 0) scenario.format = qsdc::parse_format(args.format);
    if (scenario.shots == 0) {
        throw std::invalid_argument("--shots must be >= 1");
    }
    if (scenario.messages.empty()) {
        throw std::invalid_argument("no messages selected");
    }
    return scenario;
}

int cmd_run(const qsdc::Scenario& scenario) {
    const qsdc::RunReport report = qsdc::execute(scenario);
    const std::filesystem::path dir = scenario.out_dir;
    std::filesystem::create_directories(dir);
    qsdc::write_file_atomic(dir / "scenario.json", qsdc::scenario_to_json(scenario));
    const bool json = scenario.format != qsdc::OutputFormat::Csv;
    const bool csv = scenario.format != qsdc::OutputFormat::Json;
    if (json) {
        qsdc::write_file_atomic(dir / "report.json", qsdc::run_report_json(report));
    }
    if (csv) {
        qsdc::write_file_atomic(dir / "frequencies.csv", qsdc::frequency_csv(report));
        qsdc::write_file_atomic(dir / "error_rates.csv", qsdc::error_rates_csv(report));
        qsdc::write_file_atomic(dir / "statevectors.csv",
                                qsdc::statevectors_csv(report));
    }
    std::cerr << "wrote " << (dir / "scenario.json").string()
              << (json ? ", report.json" : "")
              << (csv ? ", frequencies.csv, error_rates.csv, statevectors.csv" : "")
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superdense-coding attack simulator and forensics toolkit"};
    app.set_version_flag("--version", std::string(qsdc::kVersion));
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run the protocol and write reports");
    run->add_option("--message", run_args.messages,
                    "Message to send (repeatable; default all four)");
    run->add_option("--attack", run_args.attacks,
                    "Attack spec node:position:gate:qubit (repeatable)");
    run->add_option("--noise", run_args.noise, "Readout flip probabilities e0,e1");
    run->add_option("--shots", run_args.shots, "Shots per message (default 1000)");
    run->add_option("--seed", run_args.seed,
                    "Base RNG seed; message i samples with seed+i");
    run->add_option("--out", run_args.out_dir, "Output directory (default .)");
    run->add_option("--format", run_args.format, "Report format: json|csv|both");
    run->add_option("--scenario", run_args.scenario_file,
                    "Scenario JSON to load; explicit flags override");

    std::vector<std::string> classify_attacks;
    std::string classify_out;
    CLI::App* classify = app.add_subcommand("classify",
                                            "Classify an attack as clean/bijection/scrambling");
    classify->add_option("--attack", classify_attacks, "Attack spec (repeatable)");
    classify->add_option("--out", classify_out, "Output file (default stdout)");

    std::string enum_gates = "I,X,Y,Z,S,Sdg,H,SX,SXdg";
    std::string enum_granularity = "vector";
    std::string enum_out;
    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "Enumerate attack equivalence classes");
    enumerate->add_option("--gates", enum_gates, "Comma-separated gate names");
    enumerate->add_option("--granularity", enum_granularity, "vector|distribution");
    enumerate->add_option("--out", enum_out, "Output file (default stdout)");

    std::string calib_diag;
    std::string calib_out;
    CLI::App* calibrate = app.add_subcommand("calibrate",
                                             "Fit readout noise to clean-run frequencies");
    calibrate->add_option("--diag", calib_diag,
                          "Correct-string frequencies d00,d01,d10,d11")
        ->required();
    calibrate->add_option("--out", calib_out, "Output file (default stdout)");

    std::string match_observed;
    std::vector<std::string> match_hypotheses;
    std::string match_noise;
    std::string match_out;
    CLI::App* match = app.add_subcommand("match",
                                         "Rank attack hypotheses against observed counts");
    match->add_option("--observed", match_observed, "Counts JSON file")->required();
    match->add_option("--hypothesis", match_hypotheses,
                      "Attack list, '+'-joined; 'clean' for no attack (repeatable)")
        ->required();
    match->add_option("--noise", match_noise, "Readout flip probabilities e0,e1");
    match->add_option("--out", match_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) {
            qsdc::Scenario scenario;
            try {
                scenario = build_scenario(run_args, run);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            return cmd_run(scenario);
        }

        if (classify->parsed()) {
            std::vector<qsdc::AttackSpec> attacks;
            try {
                attacks = parse_attacks(classify_attacks);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            emit(qsdc::classification_json(qsdc::classify(attacks), attacks),
                 classify_out);
            return kExitOk;
        }

        if (enumerate->parsed()) {
            std::vector<qsdc::Gate> gates;
            qsdc::Granularity granularity;
            try {
                for (const std::string& name : split(enum_gates, ',')) {
                    const auto id = qsdc::parse_gate_id(name);
                    if (!id) {
                        throw std::invalid_argument("unknown gate '" + name + "'");
                    }
                    gates.push_back(qsdc::Gate::named(*id));
                }
                if (enum_granularity == "vector") {
                    granularity = qsdc::Granularity::VectorUpToPhase;
                } else if (enum_granularity == "distribution") {
                    granularity = qsdc::Granularity::Distribution;
                } else {
                    throw std::invalid_argument("--granularity must be vector|distribution");
                }
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            emit(qsdc::classes_json(qsdc::enumerate_equivalences(gates, granularity),
                                    granularity),
                 enum_out);
            return kExitOk;
        }

        if (calibrate->parsed()) {
            std::array<double, 4> diag{};
            try {
                const auto parts = split(calib_diag, ',');
                if (parts.size() != 4) {
                    throw std::invalid_argument("--diag expects four values d00,d01,d10,d11");
                }
                for (std::size_t i = 0; i < 4; ++i) {
                    diag[i] = std::stod(parts[i]);
                }
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            emit(qsdc::calibration_json(qsdc::calibrate(diag), diag), calib_out);
            return kExitOk;
        }

        if (match->parsed()) {
            std::map<qsdc::Message, qsdc::Counts> observed;
            std::vector<std::vector<qsdc::AttackSpec>> hypotheses;
            std::optional<qsdc::NoiseModel> noise;
            try {
                observed = qsdc::counts_from_json(read_file(match_observed));
                for (const std::string& h : match_hypotheses) {
                    hypotheses.push_back(parse_hypothesis(h));
                }
                if (!match_noise.empty()) {
                    noise = parse_noise(match_noise);
                }
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return kExitConfig;
            }
            emit(qsdc::match_json(qsdc::signature_match(observed, std::move(hypotheses),
                                                        noise)),
                 match_out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kExitSimulation;
    }
    return kExitOk;
}
