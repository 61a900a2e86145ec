#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "config.hpp"
#include "rsl/error.hpp"
#include "rsl/io.hpp"
#include "rsl/parallel.hpp"

using namespace rsl;
using namespace rsl::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int config_failure(const std::vector<Violation>& violations) {
  std::cout << violations_json(violations).dump(2) << "\n";
  return kExitConfig;
}

// Precondition failures raised by the library count as configuration errors;
// numerical failures (no convergence, under-resolved grids) as a failed run.
bool is_config_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonConvergent:
    case ErrorKind::NonContraction:
    case ErrorKind::QuadratureUnderresolved:
      return false;
    default:
      return true;
  }
}

std::string command_list() {
  std::string s = "Commands:";
  for (const auto& c : command_names()) s += "\n  " + c;
  return s + "\n\nFlags override values read from --config (key = value lines, keys as flag names).";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial dispersive estimates toolkit"};
  app.footer(command_list());
  std::string command, config_path;
  bool validate_only = false;
  app.add_option("command", command, "subcommand to run")->required();
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_flag("--validate", validate_only, "report violations and exit without running");

  RunConfig defaults;
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> options;
  for (const Field& f : fields(defaults)) {
    flag_values[f.name];
    options[f.name] = app.add_option("--" + f.name, flag_values[f.name], f.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return config_failure({{"ConfigError", "", e.what()}});
  }

  std::map<std::string, std::string> raw;
  try {
    if (!config_path.empty()) raw = read_config_file(config_path);
  } catch (const Error& e) {
    return config_failure({{rsl::to_string(e.kind()), "config", e.what()}});
  }
  for (const auto& [name, opt] : options)
    if (opt->count() > 0) raw[name] = flag_values[name];

  std::vector<Violation> violations;
  const RunConfig config = resolve(command, raw, violations);
  if (violations.empty()) violations = validate(config);
  if (!violations.empty()) return config_failure(violations);
  if (validate_only) {
    std::cout << violations_json({}).dump(2) << "\n";
    return 0;
  }

  set_thread_count(static_cast<unsigned>(config.threads));
  const auto dir = output_root(config.out.empty() ? std::nullopt : std::optional(config.out)) / config.run_id;
  Json report;
  report["command"] = config.command;
  report["config"] = to_json(config);
  try {
    const Outcome o = run_command(config);
    report["status"] = to_string(o.status);
    report["result"] = o.result;
    write_text(dir / "report.json", report.dump(2) + "\n");
    write_text(dir / "data.csv", o.data.csv());
    write_text(dir / "plot.dat", plot_data(o.plot_x, o.plot_y));
    std::cout << to_string(o.status) << " " << config.command << " -> " << dir.string() << "\n";
    return o.status == Status::fail ? kExitFail : 0;
  } catch (const Error& e) {
    report["status"] = "ERROR";
    report["error"] = error_json(e);
    std::cout << error_json(e).dump(2) << "\n";
    try {
      write_text(dir / "report.json", report.dump(2) + "\n");
    } catch (const Error&) {
    }
    return is_config_kind(e.kind()) ? kExitConfig : kExitFail;
  }
}
