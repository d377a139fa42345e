// ringelhall <command> <config> [options]

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ringelhall/cli.hpp"
#include "ringelhall/config.hpp"

using namespace ringelhall;

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of nilpotent quiver representations over F_p"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format;
  std::optional<int> height;
  std::string suite = "all";

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "configuration file")->required();
    sub->add_option("--format", format, "override [output] format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  add("classify", "class counts and indecomposable counts per dimension vector");
  add("hall-table", "classes with automorphism counts and every nonzero Hall number");
  add("cartan", "symmetric Euler form, Cartan matrix and symmetrizers");
  add("roots", "positive roots up to a height")->add_option("--height", height, "height bound (default: config)");
  add("sv", "new primitive generators per degree and the enlarged datum");
  add("verify", "run identity suites")
      ->add_option("--suite", suite, "hopf|pairing|composition|sv|kac|character|all")
      ->check(CLI::IsMember({"hopf", "pairing", "composition", "sv", "kac", "character", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Config config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (format == "json") config.format = OutputFormat::json;
  if (format == "text") config.format = OutputFormat::text;

  Command cmd;
  cmd.name = app.get_subcommands().front()->get_name();
  cmd.height = height;
  cmd.suite = suite;
  CommandResult r = run_command(cmd, config);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}
