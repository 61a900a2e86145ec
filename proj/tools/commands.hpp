#pragma once

#include <vector>

#include "config.hpp"
#include "rsl/io.hpp"

namespace rsl::cli {

// complete: a query or experiment without a verdict.
enum class Status { complete, pass, fail };
const char* to_string(Status s);

struct Outcome {
  Json result;
  Table data{{}};
  std::vector<double> plot_x, plot_y;
  Status status = Status::complete;
};

// Dispatches on config.command; the config is assumed validated.
Outcome run_command(const RunConfig& config);

}  // namespace rsl::cli
