#include "tfpme/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tfpme {

void Table::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void Table::add_meta(std::string key, double value) {
  metadata.emplace_back(std::move(key), format_number(value));
}

const std::string& Table::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  throw std::out_of_range("table: no metadata entry '" + key + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << " = " << value << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) {
    char* end = nullptr;
    const double number = std::strtod(value.c_str(), &end);
    if (!value.empty() && end == value.c_str() + value.size()) {
      doc[key] = number;
    } else {
      doc[key] = value;
    }
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    auto column = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) column.push_back(row[c]);
    doc[table.columns[c]] = std::move(column);
  }
  out << doc.dump(1) << '\n';
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos || eq < 2) {
        throw std::runtime_error("csv: malformed metadata at line " + std::to_string(line_no));
      }
      table.add_meta(line.substr(2, eq - 2), line.substr(eq + 3));
      continue;
    }
    std::stringstream cells(line);
    std::string cell;
    if (!have_header) {
      while (std::getline(cells, cell, ',')) table.columns.push_back(cell);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) {
      char* end = nullptr;
      row.push_back(std::strtod(cell.c_str(), &end));
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw std::runtime_error("csv: bad number at line " + std::to_string(line_no));
      }
    }
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("csv: wrong column count at line " + std::to_string(line_no));
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv: missing header row");
  return table;
}

Table profile_table(const Profile& profile, bool reflected) {
  Table table;
  table.columns = {"z", "U"};
  const Grid& grid = profile.grid();
  const std::size_t big_n = grid.n_steps();
  for (std::size_t n = 0; n <= big_n; ++n) table.rows.push_back({grid.node(n), profile[n]});
  if (reflected) {
    for (std::size_t n = big_n; n-- > 0;) table.rows.push_back({-grid.node(n), profile[n]});
  }
  return table;
}

Table spacetime_table(const SpaceTimeSolution& solution, std::span<const double> times) {
  Table table;
  table.columns = {"x", "t", "u"};
  const Grid& grid = solution.profile().grid();
  const std::size_t big_n = grid.n_steps();
  for (const double t : times) {
    const double stretch = std::pow(t, solution.similarity_exponent());
    const auto emit = [&](double z) {
      const double x = z * stretch;
      table.rows.push_back({x, t, solution.evaluate_u(x, t)});
    };
    for (std::size_t n = 0; n <= big_n; ++n) emit(grid.node(n));
    for (std::size_t n = big_n; n-- > 0;) emit(-grid.node(n));
  }
  return table;
}

}  // namespace tfpme
