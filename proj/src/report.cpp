#include "susyqm/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace susyqm {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the header");
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("no column named " + name);
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "tsv") return Format::Tsv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(format_double(v));
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, c);
}

void write_delimited(std::ostream& out, const Table& t, char sep) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << sep;
      out << cells[i];
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const Cell& c : row) cells.push_back(cell_text(c));
    line(cells);
  }
  for (const auto& [k, v] : t.notes) out << "# " << k << sep << v << '\n';
}

}  // namespace

void write_table(std::ostream& out, const Table& t, Format f, const std::string& command,
                 const std::string& config_json) {
  if (f == Format::Csv) return write_delimited(out, t, ',');
  if (f == Format::Tsv) return write_delimited(out, t, '\t');
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["config"] = nlohmann::ordered_json::parse(config_json);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  if (!t.notes.empty()) {
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.notes) notes[k] = v;
    doc["notes"] = std::move(notes);
  }
  out << doc.dump(2) << '\n';
}

Table read_delimited(std::istream& in, char sep) {
  auto split = [sep](const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      const std::size_t p = s.find(sep, start);
      out.push_back(s.substr(start, p - start));
      if (p == std::string::npos) return out;
      start = p + 1;
    }
  };
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty table");
  t.columns = split(line);
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto parts = split(line.substr(2));
      t.note(parts.at(0), parts.size() > 1 ? parts[1] : "");
      continue;
    }
    std::vector<Cell> row;
    for (const std::string& s : split(line)) {
      if (s.empty()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      double v;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec == std::errc() && res.ptr == s.data() + s.size())
        row.emplace_back(v);
      else
        row.emplace_back(s);
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace susyqm
