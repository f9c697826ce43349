#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lctkit::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 style: fields with commas, quotes or newlines are quoted.
void write_csv(std::ostream& os, const Table& t);
/// Left-aligned columns separated by two spaces, with a dashed rule.
void write_table(std::ostream& os, const Table& t);

}  // namespace lctkit::cli
