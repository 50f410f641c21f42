#include "blochgeom/manifest.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

namespace blochgeom {

#ifndef BLOCHGEOM_VERSION
#define BLOCHGEOM_VERSION "0.0.0"
#endif

const char* tool_version() { return BLOCHGEOM_VERSION; }

std::string format_utc(std::int64_t epoch_seconds) {
  const std::time_t t = static_cast<std::time_t>(epoch_seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest RunManifest::begin(std::string command, nlohmann::json parameters,
                               std::optional<std::uint64_t> seed) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  m.seed = seed;

  std::int64_t now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
  if (const char* fixed = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(fixed, &end, 10);
    if (end != fixed && *end == '\0') now = v;
  }
  m.started_utc = format_utc(now);
  return m;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j{{"command", command},
                   {"parameters", parameters},
                   {"version", version},
                   {"started_utc", started_utc}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return j;
}

std::string RunManifest::csv_comment() const { return "# manifest " + to_json().dump(); }

}  // namespace blochgeom
