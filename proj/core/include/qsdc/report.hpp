#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/forensics.hpp"
#include "qsdc/scenario.hpp"

namespace qsdc {

// JSON documents carry a versioned "schema" field; see docs/formats.md.
inline constexpr std::string_view kScenarioSchema = "qsdc.scenario.v1";
inline constexpr std::string_view kReportSchema = "qsdc.report.v1";
inline constexpr std::string_view kClassificationSchema = "qsdc.classification.v1";
inline constexpr std::string_view kClassesSchema = "qsdc.classes.v1";
inline constexpr std::string_view kMatchSchema = "qsdc.match.v1";
inline constexpr std::string_view kCalibrationSchema = "qsdc.calibration.v1";
inline constexpr std::string_view kCountsSchema = "qsdc.counts.v1";

struct RunReport {
    Scenario scenario;
    std::map<Message, RunResult> results;
    ErrorRateReport rates;
};

/// Runs every message of the scenario (message i samples with
/// seed + i) and computes the per-message error rates.
RunReport execute(const Scenario& scenario);

std::string run_report_json(const RunReport& report);

/// Frequency table in the conventional layout: rows are observed
/// strings, columns intended strings, cells percentages.
std::string frequency_csv(const RunReport& report);
std::string error_rates_csv(const RunReport& report);
std::string statevectors_csv(const RunReport& report);

std::string classification_json(const AttackClassification& classification,
                                std::span<const AttackSpec> attacks);
std::string classes_json(const std::vector<EquivalenceClass>& classes,
                         Granularity granularity);
std::string match_json(const std::vector<MatchResult>& results);
std::string calibration_json(const CalibrationResult& fit,
                             const std::array<double, 4>& targets);

std::string counts_to_json(const std::map<Message, Counts>& counts);
std::map<Message, Counts> counts_from_json(std::string_view text);

/// Write-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace qsdc
