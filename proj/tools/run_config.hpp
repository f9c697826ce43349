#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lctkit::cli {

enum class Format { Auto, Json, Csv, Table };

Format parse_format(const std::string& text);
const char* format_name(Format f);

/*
 * Settings shared by all commands. Precedence, lowest first: compiled-in
 * defaults, the optional key=value config file, LCTKIT_CACHE_DIR /
 * LCTKIT_WORKERS, then command-line flags.
 */
struct RunConfig {
  std::string cache_dir;
  bool cache = true;
  Format format = Format::Auto;
  unsigned workers = 1;

  std::int64_t enum_max_den = 100;
  std::int64_t p1_max_m = 60;
  std::int64_t p1_max_den = 60;
  std::int64_t lct2_max_m = 30;
  std::int64_t lct2_max_den = 20;
  std::int64_t pair_samples = 1000;
  std::int64_t pair_max_m = 50;
  std::int64_t eq_s_samples = 500;

  /// Where each value came from: "default", "file", "env" or "flag".
  std::map<std::string, std::string> sources;

  static RunConfig defaults();
  /// Throws UsageError on unknown keys, bad values or an unreadable file.
  void load_file(const std::string& path);
  void apply_env();
  void set(const std::string& key, const std::string& value, const std::string& source);
  /// Throws UsageError unless every cap is positive and workers >= 1.
  void validate() const;

  std::vector<std::pair<std::string, std::string>> entries() const;
};

}  // namespace lctkit::cli
