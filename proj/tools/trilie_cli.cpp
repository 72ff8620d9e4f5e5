#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "trilie/driver.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for ternary Lie algebras, actions, "
               "crossed homomorphisms, and their deformations"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  std::string weight;
  trilie::DriverOptions opt;
  app.add_option("-f,--file", file,
                 "definition file declaring the named objects");
  app.add_option("--seed", opt.seed, "random seed for verify-theorems");
  app.add_option("--trials", opt.trials,
                 "sample-count scale for verify-theorems");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", opt.timing,
               "add wall-clock milliseconds to the report");

  std::string chosen;
  std::vector<std::string> args;
  for (const std::string& name : trilie::command_names()) {
    CLI::App* sub = app.add_subcommand(name, trilie::command_usage(name));
    sub->fallthrough(); // global options may follow the subcommand
    sub->add_option("args", args, "command arguments");
    if (name == "check-rb") {
      sub->add_option("--weight", weight,
                      "operator weight (rational, default 1)");
    }
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2; // --help is a success, anything else is usage
  }

  std::optional<std::string> definition;
  if (!file.empty()) {
    definition = read_file(file);
    if (!definition) {
      std::cerr << "error: cannot read definition file '" << file << "'\n";
      return 2;
    }
  }
  if (!weight.empty()) args.push_back(weight);
  opt.format = format == "json" ? trilie::ReportFormat::json
                                : trilie::ReportFormat::text;

  const trilie::RunResult res =
      trilie::run_command(chosen, args, definition, opt);
  std::cout << res.output;
  return res.exit_code;
}
