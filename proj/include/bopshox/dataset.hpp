#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bopshox/error.hpp"

namespace bopshox {

// Row-oriented numeric table; every emitted file goes through this type.
struct Dataset {
  std::string name;                       // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row matches columns.size()
  std::string key_column;                 // column reported in the summary line
};

enum class Format { Csv, Json };

// Expected column layout of a figure dataset; the descriptors are checked in
// with the source and validated before anything is written.
struct Schema {
  const char* name;
  std::vector<const char*> columns;
};

const Schema& figure_schema(int figure);  // 1..5
void validate_schema(const Dataset& ds, const Schema& schema);

// 17 significant digits, round-trip safe, locale independent.
std::string format_g17(double v);

void write_csv(const Dataset& ds, std::ostream& os);
void write_json(const Dataset& ds, std::ostream& os);

// Writes <dir>/<name>.<csv|json>; returns the path.
std::filesystem::path write_file(const Dataset& ds, const std::filesystem::path& dir, Format fmt);

// "name.csv: 1681 rows, eps_bo in [-1.1e-4, 5.6e-3]"
std::string summary_line(const Dataset& ds, const std::filesystem::path& path);

}  // namespace bopshox
