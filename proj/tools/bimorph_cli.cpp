#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bimorph/workspace.hpp"

namespace {

struct Options {
  std::vector<std::string> workspaces;
  std::string json_path;
  std::uint32_t max_size = 2;
  std::int64_t budget = -1;
};

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--workspace", opts.workspaces,
                  "workspace file (repeatable; later files shadow earlier)");
  cmd->add_option("--json", opts.json_path, "write the JSON report here");
  cmd->add_option("--max-size", opts.max_size,
                  "largest test-set size for law quantification");
  cmd->add_option("--budget", opts.budget,
                  "enumeration budget (overrides BIMORPH_BUDGET)");
}

int run(const Options& opts, const bimorph::CommandRequest& req) {
  if (opts.budget >= 0) {
    bimorph::set_enumeration_budget(static_cast<std::size_t>(opts.budget));
  } else if (const char* env = std::getenv("BIMORPH_BUDGET")) {
    bimorph::set_enumeration_budget(
        static_cast<std::size_t>(std::strtoull(env, nullptr, 10)));
  }
  bimorph::Workspace ws;
  try {
    ws = bimorph::parse_workspace(opts.workspaces);
  } catch (const bimorph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  bimorph::CommandResult result = bimorph::run_command(ws, req);
  std::cout << result.human;
  if (!opts.json_path.empty()) {
    std::ofstream out(opts.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << opts.json_path << "\n";
      return 2;
    }
    out << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monad algebra toolkit"};
  app.require_subcommand(1);

  Options opts;
  std::map<std::string, std::string> args;

  struct Sub {
    const char* name;
    const char* help;
    // option name -> required
    std::vector<std::pair<const char*, bool>> options;
  };
  const std::vector<Sub> subs = {
      {"check-monad", "verify the monad laws", {{"monad", true}}},
      {"check-morphism", "verify the monad-morphism laws",
       {{"sigma", true}}},
      {"check-strength", "verify the canonical strength axioms",
       {{"monad", true}}},
      {"check-commutative", "decide commutativity on the test sets",
       {{"monad", true}}},
      {"check-bimorphism", "check a map for bilinearity",
       {{"monad", true},
        {"map", true},
        {"alpha", true},
        {"beta", true},
        {"gamma", true}}},
      {"check-kleisli-law", "verify a built-in law family",
       {{"monad", true}, {"law", false}}},
      {"check-em-law", "verify a monad morphism as an algebra-lifting law",
       {{"sigma", true}}},
      {"lift", "restrict an algebra along a monad morphism",
       {{"sigma", true}, {"algebra", true}}},
      {"classify", "classifying object of an algebra along a monad morphism",
       {{"sigma", true}, {"algebra", true}}},
      {"tensor", "tensor product of two algebras",
       {{"monad", true}, {"left", true}, {"right", true}}},
      {"coproduct-lift", "coproduct of two algebras",
       {{"monad", true}, {"left", true}, {"right", true}}},
      {"verify-universal", "verify the universal property by enumeration",
       {{"monad", true},
        {"left", true},
        {"right", true},
        {"functor", false},
        {"max-gamma", false}}},
      {"adjoint-lift", "lift an adjunction along a monad morphism",
       {{"sigma", true}, {"alpha", false}, {"beta", false}}},
  };

  std::string chosen;
  for (const auto& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_common(cmd, opts);
    for (const auto& [opt_name, required] : sub.options) {
      auto* o = cmd->add_option("--" + std::string(opt_name), args[opt_name]);
      if (required) {
        o->required();
      }
    }
    cmd->callback([&chosen, name = std::string(sub.name)] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bimorph::CommandRequest req;
  req.command = chosen;
  req.max_size = opts.max_size;
  for (const auto& [k, v] : args) {
    if (!v.empty()) {
      req.args[k] = v;
    }
  }
  return run(opts, req);
}
