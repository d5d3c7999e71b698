#ifndef BIMORPH_WORKSPACE_HPP_
#define BIMORPH_WORKSPACE_HPP_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bimorph/adjoint.hpp"
#include "bimorph/fixtures.hpp"

namespace bimorph {

// Named definitions parsed from workspace files. Algebras and families
// are stored as raw definitions and resolved on demand (resolution
// needs the monad expression evaluated first).
struct Workspace {
  struct AlgebraDef {
    std::string monad_expr;
    std::string carrier;                // set name
    std::vector<std::uint32_t> table;   // structure map, row of T(carrier)
  };
  struct FamilyDef {
    std::string source_expr;  // monad expression
    std::string target_expr;
    // per-set component tables keyed by set name
    std::map<std::string, std::vector<std::uint32_t>> components;
  };

  std::map<std::string, FiniteSemiring> semirings;
  std::map<std::string, FiniteMonoid> monoids;
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinMap> maps;  // resolved eagerly (sets must precede)
  std::map<std::string, AlgebraDef> algebras;
  std::map<std::string, FamilyDef> families;
};

// Parses and validates one or more workspace files. A file whose first
// non-space character is '{' is treated as the JSON encoding of the
// same schema; otherwise the line-oriented text format applies.
// ParseError carries file/position context; ValidationError names the
// definition and failed axiom.
Workspace parse_workspace(const std::vector<std::string>& paths);
Workspace parse_workspace_text(const std::string& text,
                               const std::string& origin);
Workspace parse_workspace_json(const std::string& text,
                               const std::string& origin);

// identity | maybe | writer(<monoid>) | semimodule(<semiring>) |
// product(<expr>,...); names resolve against the workspace first, then
// the built-in fixtures.
MonadInstance parse_monad(const std::string& expr, const Workspace& ws);

// Algebra references: a workspace algebra name, or free(<k>) for the
// free algebra of `monad` on a k-element set.
Algebra resolve_algebra(const std::string& ref, const MonadInstance& monad,
                        const Workspace& ws);

// Monad morphism references: a workspace family name, or the built-ins
// maybe-to-bool and writer-z2-inversion.
MonadMorphism resolve_sigma(const std::string& ref, const Workspace& ws);

struct CommandRequest {
  std::string command;
  std::map<std::string, std::string> args;
  std::uint32_t max_size = 2;
};

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 fail, 2 usage, 3 budget
  std::string human;
  nlohmann::ordered_json report;
};

// Executes one subcommand against the workspace; never throws (errors
// are encoded in exit_code and the report). Reports are deterministic
// byte-for-byte for fixed inputs and budget.
CommandResult run_command(const Workspace& ws, const CommandRequest& req);

}  // namespace bimorph

#endif  // BIMORPH_WORKSPACE_HPP_
