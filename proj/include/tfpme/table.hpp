#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tfpme/profile.hpp"
#include "tfpme/reconstruct.hpp"

namespace tfpme {

/// Column-named numeric table with ordered key/value metadata.
///
/// CSV layout: one "# key = value" line per metadata entry, then a header
/// row of column names, then data rows. Numbers are written with 17
/// significant digits so every double survives a write/read cycle exactly.
/// JSON layout: one flat object; metadata entries become top-level fields
/// and each column becomes an array of numbers.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value);
  void add_meta(std::string key, double value);
  /// Metadata value for `key`; throws std::out_of_range when absent.
  const std::string& meta(const std::string& key) const;
};

/// Shortest-exact decimal form used throughout ("%.17g").
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
/// Parses the CSV layout above; throws std::runtime_error on malformed input.
Table read_csv(std::istream& in);

/// (z, U) rows for the half profile, or for the even reflection on
/// [-z0, z0] (2N+1 rows) when `reflected` is set.
Table profile_table(const Profile& profile, bool reflected);

/// (x, t, u) rows on the mapped reflected grid x = z_n t^a for each time.
Table spacetime_table(const SpaceTimeSolution& solution, std::span<const double> times);

}  // namespace tfpme
