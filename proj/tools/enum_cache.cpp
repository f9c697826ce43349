#include "enum_cache.hpp"

#include <filesystem>
#include <fstream>
#include <cstdint>
#include <cstdio>

namespace lctkit::cli {

namespace fs = std::filesystem;

std::string EnumCache::path_for(const nlohmann::ordered_json& key) const {
  // FNV-1a of the key text names the file; the key itself is stored and compared.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char name[40];
  std::snprintf(name, sizeof name, "t2enum_%016llx.json", static_cast<unsigned long long>(h));
  return (fs::path(dir_) / name).string();
}

std::optional<nlohmann::ordered_json> EnumCache::load(const nlohmann::ordered_json& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const auto j = nlohmann::ordered_json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("version", -1) != kVersion) return std::nullopt;
  if (!j.contains("key") || j.at("key") != key || !j.contains("result")) return std::nullopt;
  return j.at("result");
}

void EnumCache::store(const nlohmann::ordered_json& key, const nlohmann::ordered_json& result) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::ordered_json{{"version", kVersion}, {"key", key}, {"result", result}}.dump() << '\n';
    if (!out) return;
  }
  fs::rename(tmp, path, ec);
}

}  // namespace lctkit::cli
