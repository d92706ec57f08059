#include "bopshox/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace bopshox {

namespace {

const Schema kFigureSchemas[5] = {
    {"figure1", {"delta", "Omega_bar", "B", "sign"}},
    {"figure2", {"n", "l", "eps_bo"}},
    {"figure3", {"delta", "n", "l", "sigma"}},
    {"figure4", {"delta", "G11", "G12", "G21", "G22", "Gt11", "Gt12", "Gt21", "Gt22"}},
    {"figure5", {"delta", "Gt11", "Gt12", "Gt21", "Gt22", "Ut11", "Ut12", "Ut21", "Ut22"}},
};

}  // namespace

const Schema& figure_schema(int figure) {
  if (figure < 1 || figure > 5)
    throw Error(Errc::ConfigError, "dataset: figure index must be 1..5");
  return kFigureSchemas[figure - 1];
}

void validate_schema(const Dataset& ds, const Schema& schema) {
  bool ok = ds.name == schema.name && ds.columns.size() == schema.columns.size();
  for (std::size_t i = 0; ok && i < ds.columns.size(); ++i)
    ok = ds.columns[i] == schema.columns[i];
  if (!ok)
    throw Error(Errc::SchemaMismatch,
                "dataset: '" + ds.name + "' does not match the checked-in schema '" +
                    schema.name + "'");
  for (const auto& row : ds.rows)
    if (row.size() != ds.columns.size())
      throw Error(Errc::SchemaMismatch, "dataset: ragged row in '" + ds.name + "'");
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Dataset& ds, std::ostream& os) {
  for (std::size_t i = 0; i < ds.columns.size(); ++i)
    os << (i ? "," : "") << ds.columns[i];
  os << "\n";
  for (const auto& row : ds.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_g17(row[i]);
    os << "\n";
  }
}

void write_json(const Dataset& ds, std::ostream& os) {
  os << "[";
  for (std::size_t r = 0; r < ds.rows.size(); ++r) {
    os << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < ds.rows[r].size(); ++i)
      os << (i ? "," : "") << "\"" << ds.columns[i] << "\":" << format_g17(ds.rows[r][i]);
    os << "}";
  }
  os << "\n]\n";
}

std::filesystem::path write_file(const Dataset& ds, const std::filesystem::path& dir, Format fmt) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / (ds.name + (fmt == Format::Csv ? ".csv" : ".json"));
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::IoError, "dataset: cannot open " + path.string() + " for writing");
  if (fmt == Format::Csv)
    write_csv(ds, os);
  else
    write_json(ds, os);
  os.flush();
  if (!os) throw Error(Errc::IoError, "dataset: write to " + path.string() + " failed");
  return path;
}

std::string summary_line(const Dataset& ds, const std::filesystem::path& path) {
  std::size_t key = 0;
  for (std::size_t i = 0; i < ds.columns.size(); ++i)
    if (ds.columns[i] == ds.key_column) key = i;
  double lo = 0.0, hi = 0.0;
  if (!ds.rows.empty()) {
    lo = hi = ds.rows.front()[key];
    for (const auto& row : ds.rows) {
      lo = std::min(lo, row[key]);
      hi = std::max(hi, row[key]);
    }
  }
  return path.string() + ": " + std::to_string(ds.rows.size()) + " rows, " +
         (ds.columns.empty() ? "" : ds.columns[key]) + " in [" + format_g17(lo) + ", " +
         format_g17(hi) + "]";
}

}  // namespace bopshox
