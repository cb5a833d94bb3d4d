#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kpo {

// Tabular result with embedded provenance. Files written from the same
// Dataset are byte-identical run to run: numbers are formatted with 17
// significant digits, metadata order is fixed, line endings are LF.
struct Column {
  std::string name;
  std::string unit;  // "" for dimensionless / labels
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct Dataset {
  std::string schema;  // e.g. "kpo.spectrum.v1"
  std::vector<std::pair<std::string, std::string>> meta;  // ordered key/value
  std::vector<std::string> notes;                         // warnings, summaries
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format17(double x);
std::uint64_t fnv1a64(std::string_view s);
std::string hash_hex(std::string_view s);

void write_csv(const Dataset& d, std::ostream& os);
void write_json(const Dataset& d, std::ostream& os);

// format: "csv" or "json"; creates/truncates path.
void write_file(const Dataset& d, const std::string& path, const std::string& format);

}  // namespace kpo
