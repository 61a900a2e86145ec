#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rsl/nonlinear.hpp"
#include "rsl/propagator.hpp"

namespace rsl {

// Column-major numeric table; values are written with 17 significant digits
// so output is reproducible byte for byte.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);
  void add_row(const std::vector<double>& row);
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<double>& row(std::size_t i) const { return rows_[i]; }
  std::string csv() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

std::string format_number(double x);

// t, r, re, im, abs per sample.
Table field_table(const SpaceTimeField& field);
// s, re, im, abs on the profile's grid.
Table profile_table(const RadialProfile& profile);
// t, mass, energy (mass column omitted when absent).
Table conservation_table(const ConservationSeries& series);

// Two whitespace-separated columns.
std::string plot_data(const std::vector<double>& x, const std::vector<double>& y);

void write_text(const std::filesystem::path& path, const std::string& text);

// Output root: explicit value, else RSL_OUTPUT_DIR, else ./rsl-output.
std::filesystem::path output_root(const std::optional<std::string>& explicit_dir);

}  // namespace rsl
