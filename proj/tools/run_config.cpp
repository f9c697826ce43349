#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include "lctkit/rational.hpp"

namespace lctkit::cli {

Format parse_format(const std::string& text) {
  if (text == "auto") return Format::Auto;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw UsageError("unknown format '" + text + "' (auto, json, csv, table)");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Auto: return "auto";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Table: return "table";
  }
  return "?";
}

namespace {

std::string default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/lctkit";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/lctkit";
  return ".lctkit-cache";
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' needs an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw UsageError("config key '" + key + "' needs a boolean, got '" + value + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.cache_dir = default_cache_dir();
  c.workers = std::max(1u, std::thread::hardware_concurrency());
  for (const auto& [k, v] : c.entries()) c.sources[k] = "default";
  return c;
}

void RunConfig::set(const std::string& key, const std::string& value, const std::string& source) {
  if (key == "cache_dir") {
    cache_dir = value;
  } else if (key == "cache") {
    cache = parse_bool(key, value);
  } else if (key == "format") {
    format = parse_format(value);
  } else if (key == "workers") {
    const auto w = parse_int(key, value);
    if (w < 1 || w > 1024) throw UsageError("workers must be between 1 and 1024");
    workers = static_cast<unsigned>(w);
  } else if (key == "enum_max_den") {
    enum_max_den = parse_int(key, value);
  } else if (key == "p1_max_m") {
    p1_max_m = parse_int(key, value);
  } else if (key == "p1_max_den") {
    p1_max_den = parse_int(key, value);
  } else if (key == "lct2_max_m") {
    lct2_max_m = parse_int(key, value);
  } else if (key == "lct2_max_den") {
    lct2_max_den = parse_int(key, value);
  } else if (key == "pair_samples") {
    pair_samples = parse_int(key, value);
  } else if (key == "pair_max_m") {
    pair_max_m = parse_int(key, value);
  } else if (key == "eq_s_samples") {
    eq_s_samples = parse_int(key, value);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
  sources[key] = source;
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), "file");
  }
}

void RunConfig::apply_env() {
  if (const char* dir = std::getenv("LCTKIT_CACHE_DIR"); dir && *dir) set("cache_dir", dir, "env");
  if (const char* w = std::getenv("LCTKIT_WORKERS"); w && *w) set("workers", w, "env");
}

void RunConfig::validate() const {
  const std::pair<const char*, std::int64_t> caps[] = {
      {"enum_max_den", enum_max_den}, {"p1_max_m", p1_max_m},         {"p1_max_den", p1_max_den},
      {"lct2_max_m", lct2_max_m},     {"lct2_max_den", lct2_max_den}, {"pair_samples", pair_samples},
      {"pair_max_m", pair_max_m},     {"eq_s_samples", eq_s_samples}};
  for (const auto& [name, value] : caps) {
    if (value < 1) throw UsageError(std::string(name) + " must be positive");
  }
  if (workers < 1) throw UsageError("workers must be at least 1");
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  return {{"cache_dir", cache_dir},
          {"cache", cache ? "true" : "false"},
          {"format", format_name(format)},
          {"workers", std::to_string(workers)},
          {"enum_max_den", std::to_string(enum_max_den)},
          {"p1_max_m", std::to_string(p1_max_m)},
          {"p1_max_den", std::to_string(p1_max_den)},
          {"lct2_max_m", std::to_string(lct2_max_m)},
          {"lct2_max_den", std::to_string(lct2_max_den)},
          {"pair_samples", std::to_string(pair_samples)},
          {"pair_max_m", std::to_string(pair_max_m)},
          {"eq_s_samples", std::to_string(eq_s_samples)}};
}

}  // namespace lctkit::cli
