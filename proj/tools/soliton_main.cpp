// soliton: generate translator geometry, compute height bounds, run residual
// checks, reflection sweeps and first-contact slides.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soliton/cli.hpp"

int main(int argc, char** argv) {
  using soliton::cli::RunConfig;

  CLI::App app{"Translating soliton toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // Flags shared by every command; each command reads the subset it needs.
  const std::vector<std::string> value_flags = {"d",     "family", "lambda",       "R",     "rmax",
                                                "h",     "ntheta", "kind",         "steps", "tol",
                                                "in",    "model",  "plane-normal", "bump",  "slider",
                                                "direction", "range"};
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "Write a mesh (.obj) or profile (.csv) of a translator family"},
      {"bound", "Height bound for boundary diameter d"},
      {"intersect", "Tilted grim reaper / cylinder intersection curve"},
      {"verify", "Residual of the translator equation or asymptotic defect"},
      {"sweep", "Moving-plane reflection sweep"},
      {"touch", "First contact of a mesh slid onto another"}};

  std::map<std::string, std::string> values;
  std::string out;
  std::uint64_t seed = 0;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    for (const auto& flag : value_flags)
      sub->add_option_function<std::string>("--" + flag, [&values, flag](const std::string& v) { values[flag] = v; });
    sub->add_option("--out", out, "Output path (reports go to stdout when omitted)");
    sub->add_option("--seed", seed, "Seed for fixture perturbations");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << R"({"error":"invalid_config","message":)" << nlohmann::json(e.what()).dump() << "}\n";
    return soliton::cli::exit_invalid_config;
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.parameters = std::move(values);
  cfg.output_path = out;
  cfg.seed = seed;
  return soliton::cli::run(cfg);
}
