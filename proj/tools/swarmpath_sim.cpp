#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
  using namespace swarmpath;
  using namespace swarmpath::cli;

  CLI::App app{"Swarm path-planning simulator: potential-field leader with adaptive impedance links"};
  app.require_subcommand(1);

  std::string scenario;
  std::string output_dir = default_output_dir().string();
  std::string controller_name = "swarmpath";
  std::optional<double> dt;
  std::optional<std::size_t> max_steps;

  auto *run_cmd = app.add_subcommand("run", "Simulate one controller on a scenario");
  run_cmd->add_option("scenario", scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--controller", controller_name, "swarmpath or apf")
      ->check(CLI::IsMember({"swarmpath", "apf", "conventional-apf"}));
  run_cmd->add_option("-o,--output", output_dir, "Output directory (default $SWARMPATH_OUT or ./out)");
  run_cmd->add_option("--dt", dt, "Override the time step");
  run_cmd->add_option("--max-steps", max_steps, "Override the step budget");

  auto *compare_cmd = app.add_subcommand("compare", "Run SwarmPath and the conventional APF comparator");
  compare_cmd->add_option("scenario", scenario, "Scenario JSON file")->required();
  compare_cmd->add_option("-o,--output", output_dir, "Output directory");
  compare_cmd->add_option("--dt", dt, "Override the time step")->group("");
  compare_cmd->add_option("--max-steps", max_steps, "Override the step budget")->group("");

  std::string sweep_spec;
  auto *sweep_cmd = app.add_subcommand("sweep", "Sweep one impedance constant over a list of values");
  sweep_cmd->add_option("sweepspec", sweep_spec, "Sweep JSON file")->required();
  sweep_cmd->add_option("-o,--output", output_dir, "Output directory");

  ValidateOptions validate_options;
  auto *validate_cmd = app.add_subcommand("validate", "Self-check the integrator and potential field");
  validate_cmd->add_option("--dt", validate_options.dt)->group("");

  std::string trace_path;
  std::string reference_path;
  auto *ape_cmd = app.add_subcommand("ape", "Path-length-normalized APE between two trace files");
  ape_cmd->add_option("scenario", scenario, "Scenario both traces were produced from")->required();
  ape_cmd->add_option("trace", trace_path, "Trace to assess")->required();
  ape_cmd->add_option("reference", reference_path, "Reference trace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const ScenarioOverrides overrides{dt, max_steps};
  if (*run_cmd) {
    RunOptions options{scenario, *parse_controller(controller_name), output_dir, overrides};
    return cmd_run(options, std::cout, std::cerr);
  }
  if (*compare_cmd) return cmd_compare(scenario, output_dir, overrides, std::cout, std::cerr);
  if (*sweep_cmd) return cmd_sweep(sweep_spec, output_dir, std::cout, std::cerr);
  if (*validate_cmd) return cmd_validate(validate_options, std::cout, std::cerr);
  if (*ape_cmd) return cmd_ape(scenario, trace_path, reference_path, std::cout, std::cerr);
  return kExitInputError;
}
