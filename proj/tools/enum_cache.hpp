#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace lctkit::cli {

/*
 * On-disk cache for interval enumerations. Each entry is a JSON file
 * {"version": N, "key": {...}, "result": {...}}; entries with another version
 * or a different key are ignored and overwritten, never reused.
 */
class EnumCache {
public:
  static constexpr int kVersion = 1;

  explicit EnumCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<nlohmann::ordered_json> load(const nlohmann::ordered_json& key) const;
  /// Best effort: a cache that cannot be written only costs time.
  void store(const nlohmann::ordered_json& key, const nlohmann::ordered_json& result) const;

  std::string path_for(const nlohmann::ordered_json& key) const;

private:
  std::string dir_;
};

}  // namespace lctkit::cli
