#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace blochgeom {

const char* tool_version();

/// Provenance block written into every JSON document and as the first
/// comment line of every CSV stream.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string version = tool_version();
  std::string started_utc;

  /// Timestamp is the current UTC time, or SOURCE_DATE_EPOCH when set.
  static RunManifest begin(std::string command, nlohmann::json parameters,
                           std::optional<std::uint64_t> seed = std::nullopt);

  nlohmann::json to_json() const;
  /// "# manifest {...}"
  std::string csv_comment() const;
};

/// ISO-8601 UTC, second resolution: 2024-01-02T03:04:05Z.
std::string format_utc(std::int64_t epoch_seconds);

}  // namespace blochgeom
