#include "rsl/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "rsl/error.hpp"

namespace rsl {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(const std::vector<double>& row) {
  if (row.size() != columns_.size()) throw Error(ErrorKind::DomainError, "row width does not match the header");
  rows_.push_back(row);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Table::csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) out += (c ? "," : "") + columns_[c];
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table field_table(const SpaceTimeField& field) {
  Table t({"t", "r", "re", "im", "abs"});
  for (std::size_t i = 0; i < field.grid.nt(); ++i)
    for (std::size_t j = 0; j < field.grid.nr(); ++j) {
      const Complex v = field.at(i, j);
      t.add_row({field.grid.t[i], field.grid.r[j], v.real(), v.imag(), std::abs(v)});
    }
  return t;
}

Table profile_table(const RadialProfile& profile) {
  Table t({"s", "re", "im", "abs"});
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    const Complex v = profile.values[i];
    t.add_row({profile.grid.nodes[i], v.real(), v.imag(), std::abs(v)});
  }
  return t;
}

Table conservation_table(const ConservationSeries& series) {
  const bool mass = !series.mass.empty();
  Table t(mass ? std::vector<std::string>{"t", "mass", "energy"} : std::vector<std::string>{"t", "energy"});
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    if (mass)
      t.add_row({series.times[i], series.mass[i], series.energy[i]});
    else
      t.add_row({series.times[i], series.energy[i]});
  }
  return t;
}

std::string plot_data(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DomainError, "plot columns differ in length");
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += format_number(x[i]) + ' ' + format_number(y[i]) + '\n';
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ConfigError, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorKind::ConfigError, "write failed for " + path.string());
}

std::filesystem::path output_root(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv("RSL_OUTPUT_DIR"); env && *env) return env;
  return "rsl-output";
}

}  // namespace rsl
