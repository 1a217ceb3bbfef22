#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace susyqm {

// Empty cells (std::monostate) render as "" in CSV/TSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Side-channel key/value facts (delta spikes, diagnostics). Emitted as
  // trailing "# key,value" lines in CSV/TSV and a "notes" object in JSON.
  std::vector<std::pair<std::string, std::string>> notes;

  void add_row(std::vector<Cell> row);
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
  std::size_t column(const std::string& name) const;  // throws std::out_of_range
};

enum class Format { Csv, Tsv, Json };

std::optional<Format> parse_format(const std::string& name);

// Fixed-point with 6 decimals, "." separator regardless of locale.
std::string format_double(double v);

// `command` and `config` (a JSON object given as text) are used by the JSON form only.
void write_table(std::ostream& out, const Table& t, Format f, const std::string& command = "",
                 const std::string& config_json = "{}");

// Parses the CSV/TSV written by write_table; numeric-looking cells become doubles.
Table read_delimited(std::istream& in, char sep = ',');

}  // namespace susyqm
