#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qsdc/report.hpp"
#include "qsdc/version.hpp"

using namespace qsdc;
using nlohmann::json;

namespace {

Scenario sample_scenario() {
    Scenario s;
    s.messages = {Message{0, 0}, Message{1, 1}};
    s.attacks = {AttackSpec::parse("alice:begin:s:0"),
                 AttackSpec::parse("source:end:sx:1")};
    s.noise = NoiseModel({0.05, 0.03});
    s.shots = 2000;
    s.seed = 987654321;
    s.out_dir = "out/test";
    s.format = OutputFormat::Json;
    return s;
}

} // namespace

TEST_CASE("scenario JSON round trip") {
    CHECK(scenario_from_json(scenario_to_json(Scenario{})) == Scenario{});
    const Scenario s = sample_scenario();
    CHECK(scenario_from_json(scenario_to_json(s)) == s);
}

TEST_CASE("scenario parsing validates") {
    CHECK_THROWS(scenario_from_json("{}"));
    CHECK_THROWS(scenario_from_json("not json"));
    json doc = json::parse(scenario_to_json(Scenario{}));
    doc["shots"] = 0;
    CHECK_THROWS_AS(scenario_from_json(doc.dump()), std::invalid_argument);
    doc = json::parse(scenario_to_json(Scenario{}));
    doc["messages"] = json::array();
    CHECK_THROWS_AS(scenario_from_json(doc.dump()), std::invalid_argument);
}

TEST_CASE("execute seeds each message independently") {
    Scenario s;
    s.seed = 11;
    s.shots = 500;
    const RunReport report = execute(s);
    REQUIRE(report.results.size() == 4);
    for (const Message& m : Message::all()) {
        const RunResult& r = report.results.at(m);
        CHECK(r.counts.count(m.label()) == 500); // clean + noiseless
        const RunResult direct = run_protocol(
            build_protocol(m), {}, std::nullopt, 500,
            11 + static_cast<std::uint64_t>(m.index()));
        CHECK(r == direct);
    }
    for (const auto& [message, rates] : report.rates) {
        CHECK(rates.alice_error == 0.0);
        CHECK(rates.bob_error == 0.0);
    }
}

TEST_CASE("run report embeds seed, version, and scenario") {
    Scenario s = sample_scenario();
    s.attacks.clear();
    s.noise.reset();
    const RunReport report = execute(s);
    const json doc = json::parse(run_report_json(report));
    CHECK(doc.at("schema") == kReportSchema);
    CHECK(doc.at("version") == kVersion);
    CHECK(doc.at("seed") == s.seed);
    CHECK(scenario_from_json(doc.at("scenario").dump()) == s);
    CHECK(doc.at("results").contains("00"));
    CHECK(doc.at("results").contains("11"));
    CHECK(doc.at("results").at("00").at("ideal").at("00").get<double>() ==
          doctest::Approx(1.0));
    CHECK(doc.at("error_rates").at("11").at("alice_error").get<double>() == 0.0);
}

TEST_CASE("csv emitters mirror the table layout") {
    Scenario s;
    s.seed = 3;
    const RunReport report = execute(s);

    std::istringstream freq(frequency_csv(report));
    std::string line;
    std::getline(freq, line);
    CHECK(line == "observed,00,01,10,11");
    std::getline(freq, line);
    CHECK(line == "00,100,0,0,0");

    std::istringstream rates(error_rates_csv(report));
    std::getline(rates, line);
    CHECK(line == "message,alice_error_pct,bob_error_pct");
    std::getline(rates, line);
    CHECK(line == "00,0,0");

    std::istringstream states(statevectors_csv(report));
    std::getline(states, line);
    CHECK(line == "message,basis,re,im");
    std::getline(states, line);
    CHECK(line == "00,00,1,0");
}

TEST_CASE("classification JSON matches the documented shapes") {
    const std::vector<AttackSpec> x_attack = {AttackSpec::parse("alice:end:x:0")};
    const json bij = json::parse(classification_json(classify(x_attack), x_attack));
    CHECK(bij.at("type") == "bijection");
    CHECK(bij.at("f").at("00") == "10");
    CHECK(bij.at("f").at("01") == "11");
    CHECK(bij.at("f").at("10") == "00");
    CHECK(bij.at("f").at("11") == "01");
    CHECK(bij.at("phases").at("01").at("re").get<double>() == doctest::Approx(-1.0));

    const json clean = json::parse(classification_json(classify({}), {}));
    CHECK(clean.at("type") == "clean");

    const std::vector<AttackSpec> s_attack = {AttackSpec::parse("alice:begin:s:0")};
    const json scr = json::parse(classification_json(classify(s_attack), s_attack));
    CHECK(scr.at("type") == "scrambling");
    for (const char* m : {"00", "01", "10", "11"}) {
        CHECK(scr.at("success_prob").at(m).get<double>() == doctest::Approx(0.5));
    }
}

TEST_CASE("counts JSON round trip") {
    std::map<Message, Counts> counts;
    counts.emplace(Message{0, 0}, Counts(2, {245, 237, 251, 267}));
    counts.emplace(Message{1, 0}, Counts(2, {0, 0, 1000, 0}));
    const auto restored = counts_from_json(counts_to_json(counts));
    CHECK(restored == counts);
    CHECK_THROWS_AS(counts_from_json("{\"schema\":\"nope\"}"), std::invalid_argument);
}

TEST_CASE("atomic write leaves no temp file behind") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qsdc_report_test";
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / "x.json";
    write_file_atomic(path, "first");
    write_file_atomic(path, "second");
    std::ifstream in(path);
    std::string content;
    std::getline(in, content);
    CHECK(content == "second");
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove_all(dir);
}
