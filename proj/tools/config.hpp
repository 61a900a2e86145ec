#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rsl/report.hpp"

namespace rsl::cli {

// Inclusive integer range written "lo..hi" (a single integer is a one-point range).
struct IntRange {
  int lo = 0, hi = 0;
  std::vector<int> values() const;
  std::string str() const;
  static IntRange parse(const std::string& text);
};

struct RunConfig {
  std::string command;
  std::string symbol = "schrodinger";
  std::string family = "schrodinger";
  int n = 2;
  // exponents stay strings so "a/b" and "inf" reach the exact arithmetic untouched
  std::string q = "4";
  std::string r;  // empty: same as q
  std::string q_dual;
  std::string r_dual;
  std::string qs = "10/3,4,6";
  std::string gamma = "0";
  std::string sigma = "3/2";
  std::string p;  // empty: derived from s or sigma
  std::string s;  // empty: -1/10, or 1/4 for solve-nlw and 0 for solve-fnls
  std::string s_sch;  // empty: same as s
  double a = 2.0;
  IntRange k{-3, 3};
  int k0 = 0;  // single frequency scale for propagate, split and fit-j
  IntRange j{3, 7};
  IntRange log2_R{4, 10};
  IntRange log2_inv_delta{3, 6};
  IntRange band{-1, 0};
  std::string regime = "outer_curvature";
  double delta = 1e-3;
  int mu = 1;
  int trials = 4;
  std::uint64_t seed = 20240611;
  int seeds = 8;
  double T = 16.0;
  double T0 = 4.0;
  double R0 = 40.0;
  double tol = 1e-2;
  int max_doublings = 10;
  double max_phase_step = 0.78539816339744831;
  int panel_order = 4;
  double step_phase = 0.39269908169872414;
  int max_iter = 30;
  double picard_tol = 1e-10;
  int refinements = 4;
  int grid_points = 64;
  double resolution = 1.0;
  std::string out;
  std::string run_id;
  int threads = 0;
};

// One configurable key: its flag / file name, a parser and a serializer.
struct Field {
  std::string name;
  std::string help;
  std::function<void(const std::string&)> set;
  std::function<Json()> get;
};
std::vector<Field> fields(RunConfig& config);

const std::vector<std::string>& command_names();

struct Violation {
  std::string kind;  // error kind name
  std::string field;
  std::string message;
};

// Reads "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies raw values over the defaults; parse failures become violations.
RunConfig resolve(const std::string& command, const std::map<std::string, std::string>& raw,
                  std::vector<Violation>& violations);

// Every violation of the resolved config, without running anything.
std::vector<Violation> validate(const RunConfig& config);

Json to_json(const RunConfig& config);
Json violations_json(const std::vector<Violation>& violations);

}  // namespace rsl::cli
