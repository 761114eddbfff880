#pragma once

#include <heronet/backbone.hpp>
#include <heronet/experiments.hpp>
#include <heronet/temporal.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heronet {

/// Bad command-line usage, such as an unknown output format.
class UsageError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class Format { Json, Csv };
Format parseFormat(const std::string &name);

inline constexpr int kSchemaVersion = 1;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

struct Report {
    int schemaVersion = kSchemaVersion;
    std::string command;
    std::uint64_t seed = 0;
    std::string configHash;
    nlohmann::json payload = nlohmann::json::object();
    /// Row view used for CSV output; without it CSV lists the flattened payload.
    std::optional<Table> table;
};

/// FNV-1a 64 of the compact canonical dump, as 16 hex digits.
std::string configHash(const nlohmann::json &config);

/**
 * JSON: sorted keys, two-space indent, shortest round-trip numbers, NaN as null.
 * CSV: a `# schema_version=...` comment line, then the table (or key,value rows).
 */
std::string emitReport(const Report &report, Format format);
Report parseReport(const std::string &json);

nlohmann::json toJson(const Graph &g);
Graph graphFromJson(const nlohmann::json &j);

nlohmann::json toJson(const HicResult &h);
HicResult hicFromJson(const nlohmann::json &j);

nlohmann::json toJson(const BackboneTrace &trace);
BackboneTrace traceFromJson(const nlohmann::json &j);
Table traceTable(const BackboneTrace &trace);

nlohmann::json toJson(const DissimilarityResult &d);
nlohmann::json toJson(const SweepResult &s);
Table sweepTable(const SweepResult &s, const std::string &gridName);
nlohmann::json toJson(const SensitivityTable &t);
Table sensitivityTable(const SensitivityTable &t);
nlohmann::json toJson(const DetectionReport &r);
nlohmann::json toJson(const std::vector<ScalingPoint> &points);
Table scalingTable(const std::vector<ScalingPoint> &points);
nlohmann::json toJson(const AnomalySeries &s);
Table anomalyTable(const AnomalySeries &s, const std::vector<DateRange> &windows = {});
nlohmann::json toJson(const NullTestResult &r);

} // namespace heronet
