#include "bimorph/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bimorph {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back({cur, line});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      ++line;
    } else if (c == '\n') {
      flush();
      ++line;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      tokens.push_back({std::string(1, c), line});
    } else {
      cur += c;
    }
  }
  flush();
  return tokens;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string origin)
      : tokens_(std::move(tokens)), origin_(std::move(origin)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = pos_ < tokens_.size() ? tokens_[pos_].line
                       : tokens_.empty()    ? 1
                                            : tokens_.back().line;
    throw ParseError(origin_ + ":" + std::to_string(line) + ": " + message);
  }

  std::string next(const std::string& what) {
    if (done()) {
      fail("expected " + what + ", found end of input");
    }
    return tokens_[pos_++].text;
  }

  void expect(const std::string& tok) {
    std::string got = next("'" + tok + "'");
    if (got != tok) {
      --pos_;
      fail("expected '" + tok + "', found '" + got + "'");
    }
  }

  std::string peek() const { return done() ? "" : tokens_[pos_].text; }

  std::uint32_t number(const std::string& what) {
    std::string t = next(what);
    if (!is_number(t)) {
      --pos_;
      fail("expected " + what + " (a number), found '" + t + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(t));
  }

  std::vector<std::uint32_t> numbers() {
    std::vector<std::uint32_t> out;
    while (!done() && is_number(peek())) {
      out.push_back(number("entry"));
    }
    return out;
  }

  // tokens until the next field keyword or '}'
  std::vector<std::string> words(const std::vector<std::string>& stops) {
    std::vector<std::string> out;
    while (!done()) {
      std::string t = peek();
      if (t == "}" ||
          std::find(stops.begin(), stops.end(), t) != stops.end()) {
        break;
      }
      out.push_back(next("word"));
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::string origin_;
  std::size_t pos_ = 0;
};

const std::vector<std::string> kSemiringFields = {"size", "labels", "add",
                                                  "mul",  "zero",   "one"};
const std::vector<std::string> kMonoidFields = {"size", "labels", "op",
                                                "unit"};
const std::vector<std::string> kSetFields = {"size", "labels"};
const std::vector<std::string> kMapFields = {"dom", "cod", "table"};
const std::vector<std::string> kAlgebraFields = {"monad", "carrier",
                                                 "structure"};
const std::vector<std::string> kFamilyFields = {"source", "target", "at"};

void parse_into(Parser& p, Workspace& ws) {
  while (!p.done()) {
    std::string section = p.next("section keyword");
    std::string name = p.next("definition name");
    p.expect("{");
    if (section == "semiring") {
      FiniteSemiring s;
      s.name = name;
      std::uint32_t size = 0;
      std::vector<std::string> labels;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "size") {
          size = p.number("size");
        } else if (field == "labels") {
          labels = p.words(kSemiringFields);
        } else if (field == "add") {
          s.add = p.numbers();
        } else if (field == "mul") {
          s.mul = p.numbers();
        } else if (field == "zero") {
          s.zero = p.number("zero");
        } else if (field == "one") {
          s.one = p.number("one");
        } else {
          p.fail("unknown semiring field '" + field + "'");
        }
      }
      p.expect("}");
      s.carrier = FinSet(size, std::move(labels));
      try {
        s.validate();
      } catch (const ValidationError& e) {
        throw ValidationError("semiring " + name + ": " + e.what());
      }
      ws.semirings.insert_or_assign(name, std::move(s));
    } else if (section == "monoid") {
      FiniteMonoid m;
      m.name = name;
      std::uint32_t size = 0;
      std::vector<std::string> labels;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "size") {
          size = p.number("size");
        } else if (field == "labels") {
          labels = p.words(kMonoidFields);
        } else if (field == "op") {
          m.op = p.numbers();
        } else if (field == "unit") {
          m.unit = p.number("unit");
        } else {
          p.fail("unknown monoid field '" + field + "'");
        }
      }
      p.expect("}");
      m.carrier = FinSet(size, std::move(labels));
      try {
        m.validate();
      } catch (const ValidationError& e) {
        throw ValidationError("monoid " + name + ": " + e.what());
      }
      ws.monoids.insert_or_assign(name, std::move(m));
    } else if (section == "set") {
      std::uint32_t size = 0;
      std::vector<std::string> labels;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "size") {
          size = p.number("size");
        } else if (field == "labels") {
          labels = p.words(kSetFields);
        } else {
          p.fail("unknown set field '" + field + "'");
        }
      }
      p.expect("}");
      ws.sets.insert_or_assign(name, FinSet(size, std::move(labels)));
    } else if (section == "map") {
      std::string dom, cod;
      std::vector<std::uint32_t> table;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "dom") {
          dom = p.next("domain set name");
        } else if (field == "cod") {
          cod = p.next("codomain set name");
        } else if (field == "table") {
          table = p.numbers();
        } else {
          p.fail("unknown map field '" + field + "'");
        }
      }
      p.expect("}");
      auto di = ws.sets.find(dom);
      auto ci = ws.sets.find(cod);
      if (di == ws.sets.end() || ci == ws.sets.end()) {
        throw ValidationError("map " + name + ": unknown set '" +
                              (di == ws.sets.end() ? dom : cod) + "'");
      }
      try {
        ws.maps.insert_or_assign(
            name, FinMap(di->second, ci->second, std::move(table)));
      } catch (const ValidationError& e) {
        throw ValidationError("map " + name + ": " + e.what());
      }
    } else if (section == "algebra") {
      Workspace::AlgebraDef def;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "monad") {
          def.monad_expr = p.next("monad expression");
        } else if (field == "carrier") {
          def.carrier = p.next("carrier set name");
        } else if (field == "structure") {
          def.table = p.numbers();
        } else {
          p.fail("unknown algebra field '" + field + "'");
        }
      }
      p.expect("}");
      ws.algebras.insert_or_assign(name, std::move(def));
    } else if (section == "family") {
      Workspace::FamilyDef def;
      while (p.peek() != "}") {
        std::string field = p.next("field");
        if (field == "source") {
          def.source_expr = p.next("monad expression");
        } else if (field == "target") {
          def.target_expr = p.next("monad expression");
        } else if (field == "at") {
          std::string set_name = p.next("set name");
          def.components[set_name] = p.numbers();
        } else {
          p.fail("unknown family field '" + field + "'");
        }
      }
      p.expect("}");
      ws.families.insert_or_assign(name, std::move(def));
    } else {
      p.fail("unknown section '" + section + "'");
    }
  }
}

void validate_deferred(Workspace& ws) {
  for (const auto& [name, def] : ws.algebras) {
    MonadInstance t = parse_monad(def.monad_expr, ws);
    Algebra alg = resolve_algebra(name, t, ws);
    Verdict v = is_algebra(alg);
    if (!v) {
      throw ValidationError("algebra " + name + ": " + v.witness);
    }
  }
}

}  // namespace

Workspace parse_workspace_text(const std::string& text,
                               const std::string& origin) {
  Workspace ws;
  Parser p(tokenize(text), origin);
  parse_into(p, ws);
  validate_deferred(ws);
  return ws;
}

Workspace parse_workspace_json(const std::string& text,
                               const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  // re-encode as the text format: the JSON schema mirrors it exactly
  std::string flat;
  auto table = [](const ordered_json& arr) {
    std::string s;
    for (const auto& v : arr) {
      s += " " + v.dump();
    }
    return s;
  };
  for (const auto& [section, defs] : j.items()) {
    for (const auto& [name, body] : defs.items()) {
      flat += section + " " + name + " {\n";
      for (const auto& [field, value] : body.items()) {
        flat += "  " + field;
        if (value.is_array()) {
          if (field == "labels") {
            for (const auto& v : value) {
              flat += " " + v.get<std::string>();
            }
          } else {
            flat += table(value);
          }
        } else if (value.is_object()) {
          // family components: { "A": [...], ... } under "at"
          for (const auto& [set_name, tab] : value.items()) {
            flat += " " + set_name + table(tab);
            flat += "\n  at";
          }
          if (!value.empty()) {
            flat.resize(flat.size() - 5);  // drop the trailing "\n  at"
          } else {
            flat.resize(flat.size() - 4);  // drop the dangling "  at"
          }
        } else if (value.is_string()) {
          flat += " " + value.get<std::string>();
        } else {
          flat += " " + value.dump();
        }
        flat += "\n";
      }
      flat += "}\n";
    }
  }
  return parse_workspace_text(flat, origin);
}

Workspace parse_workspace(const std::vector<std::string>& paths) {
  Workspace ws;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    bool json_mode = first != std::string::npos && text[first] == '{';
    Workspace part = json_mode ? parse_workspace_json(text, path)
                               : parse_workspace_text(text, path);
    for (auto& [k, v] : part.semirings) ws.semirings.insert_or_assign(k, v);
    for (auto& [k, v] : part.monoids) ws.monoids.insert_or_assign(k, v);
    for (auto& [k, v] : part.sets) ws.sets.insert_or_assign(k, v);
    for (auto& [k, v] : part.maps) ws.maps.insert_or_assign(k, v);
    for (auto& [k, v] : part.algebras) ws.algebras.insert_or_assign(k, v);
    for (auto& [k, v] : part.families) ws.families.insert_or_assign(k, v);
  }
  return ws;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

FiniteSemiring find_semiring(const std::string& name, const Workspace& ws) {
  auto it = ws.semirings.find(name);
  if (it != ws.semirings.end()) return it->second;
  if (name == "bool") return fixtures::boolean_semiring();
  if (name == "f2") return fixtures::f2();
  if (name == "z4") return fixtures::z4();
  if (name == "booltri") return fixtures::bool_triangular();
  throw ParseError("unknown semiring '" + name + "'");
}

FiniteMonoid find_monoid(const std::string& name, const Workspace& ws) {
  auto it = ws.monoids.find(name);
  if (it != ws.monoids.end()) return it->second;
  if (name == "trivial") return fixtures::trivial_monoid();
  if (name == "z2") return fixtures::z2_monoid();
  if (name == "z3") return fixtures::z3_monoid();
  if (name == "z4") return fixtures::z4_monoid();
  if (name == "klein4") return fixtures::klein_four();
  if (name == "leftzero3") return fixtures::left_zero_monoid();
  if (name == "s3") return fixtures::s3_monoid();
  throw ParseError("unknown monoid '" + name + "'");
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(strip(cur));
  return parts;
}

}  // namespace

MonadInstance parse_monad(const std::string& raw, const Workspace& ws) {
  std::string expr = strip(raw);
  if (expr == "identity") return identity_monad();
  if (expr == "maybe") return maybe_monad();
  auto call = [&](const std::string& head) -> std::string {
    if (expr.size() > head.size() + 1 && expr.rfind(head + "(", 0) == 0 &&
        expr.back() == ')') {
      return expr.substr(head.size() + 1,
                         expr.size() - head.size() - 2);
    }
    return "";
  };
  if (std::string inner = call("writer"); !inner.empty()) {
    return writer_monad(find_monoid(strip(inner), ws));
  }
  if (std::string inner = call("semimodule"); !inner.empty()) {
    return semimodule_monad(find_semiring(strip(inner), ws));
  }
  if (std::string inner = call("product"); !inner.empty()) {
    std::vector<MonadInstance> parts;
    for (const auto& part : split_top_level(inner)) {
      parts.push_back(parse_monad(part, ws));
    }
    return product_monad(std::move(parts));
  }
  throw ParseError("cannot parse monad expression '" + expr + "'");
}

Algebra resolve_algebra(const std::string& ref, const MonadInstance& monad,
                        const Workspace& ws) {
  if (ref.rfind("free(", 0) == 0 && ref.back() == ')') {
    std::string inner = ref.substr(5, ref.size() - 6);
    if (is_number(inner)) {
      return free_algebra(monad,
                          fixtures::test_sets(
                              static_cast<std::uint32_t>(std::stoul(inner)))
                              .back());
    }
    auto it = ws.sets.find(strip(inner));
    if (it == ws.sets.end()) {
      throw ParseError("free(...): unknown set '" + inner + "'");
    }
    return free_algebra(monad, it->second);
  }
  auto it = ws.algebras.find(ref);
  if (it == ws.algebras.end()) {
    throw ParseError("unknown algebra '" + ref + "'");
  }
  const auto& def = it->second;
  MonadInstance declared = parse_monad(def.monad_expr, ws);
  if (declared.name() != monad.name()) {
    throw MonadMismatch("algebra " + ref + " is declared over " +
                        declared.name() + ", expected " + monad.name());
  }
  auto ci = ws.sets.find(def.carrier);
  if (ci == ws.sets.end()) {
    throw ParseError("algebra " + ref + ": unknown set '" + def.carrier + "'");
  }
  return make_algebra(monad, ci->second,
                      FinMap(monad.apply(ci->second), ci->second, def.table));
}

MonadMorphism resolve_sigma(const std::string& ref, const Workspace& ws) {
  auto it = ws.families.find(ref);
  if (it != ws.families.end()) {
    const auto& def = it->second;
    MonadInstance source = parse_monad(def.source_expr, ws);
    MonadInstance target = parse_monad(def.target_expr, ws);
    // key components by carrier size; components at quotient carriers
    // resolve by size alone
    auto components =
        std::make_shared<std::map<std::uint32_t, std::vector<std::uint32_t>>>();
    for (const auto& [set_name, table] : def.components) {
      auto si = ws.sets.find(set_name);
      if (si == ws.sets.end()) {
        throw ParseError("family " + ref + ": unknown set '" + set_name + "'");
      }
      (*components)[si->second.size] = table;
    }
    std::string name = ref;
    return MonadMorphism{
        name, source, target,
        [source, target, components, name](const FinSet& a) {
          auto ci = components->find(a.size);
          if (ci == components->end()) {
            throw ValidationError("family " + name +
                                  " has no component at carrier size " +
                                  std::to_string(a.size));
          }
          return FinMap(source.apply(a), target.apply(a), ci->second);
        }};
  }
  if (ref == "maybe-to-bool") return fixtures::maybe_to_bool_module();
  if (ref == "writer-z2-inversion") return fixtures::writer_z2_inversion();
  throw ParseError("unknown monad morphism '" + ref + "'");
}

// ---------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------

namespace {

std::string law_id(const std::string& check_name) {
  std::size_t at = check_name.find(" at ");
  return at == std::string::npos ? check_name : check_name.substr(0, at);
}

ordered_json checks_json(const LawReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["paper_anchor"] = law_id(c.name);
    switch (c.status) {
      case CheckResult::Status::pass:
        entry["verdict"] = "pass";
        entry["scope"] = c.detail;
        break;
      case CheckResult::Status::fail:
        entry["verdict"] = "fail";
        entry["witness"] = c.detail;
        break;
      case CheckResult::Status::skipped:
        entry["verdict"] = "skipped";
        entry["scope"] = c.detail;
        break;
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json map_json(const std::string& name, const FinMap& f) {
  ordered_json j;
  j["name"] = name;
  j["dom_size"] = f.dom.size;
  j["cod_size"] = f.cod.size;
  j["table"] = f.table;
  return j;
}

std::string arg_or(const CommandRequest& req, const std::string& key,
                   const std::string& fallback) {
  auto it = req.args.find(key);
  return it == req.args.end() ? fallback : it->second;
}

std::string require_arg(const CommandRequest& req, const std::string& key) {
  auto it = req.args.find(key);
  if (it == req.args.end()) {
    throw ParseError("missing required option --" + key);
  }
  return it->second;
}

struct ClassifyBundle {
  ClassifyingObject co;
  LawReport report;
};

void attach_classifying_artifacts(CommandResult& out,
                                  const ClassifyingObject& co) {
  ordered_json artifacts = ordered_json::array();
  ordered_json carrier;
  carrier["name"] = "result_carrier";
  carrier["size"] = co.result.carrier1().size;
  if (co.result.carrier1().has_labels()) {
    carrier["labels"] = co.result.carrier1().labels;
  }
  artifacts.push_back(carrier);
  artifacts.push_back(map_json("structure", co.result.structure1()));
  artifacts.push_back(map_json("q", co.q));
  artifacts.push_back(map_json("u", co.u));
  out.report["artifacts"] = artifacts;
  out.human += "result carrier size " +
               std::to_string(co.result.carrier1().size) + "\n";
  if (!co.warning.empty()) {
    out.human += "warning: " + co.warning + "\n";
  }
}

LawReport universal_property_report(const ClassifyingObject& co,
                                    std::uint32_t max_gamma) {
  LawReport report;
  for (std::uint32_t n = 1; n <= max_gamma; ++n) {
    FinSet c = fixtures::test_sets(n).back();
    std::vector<Algebra> gammas = algebras_on(co.t, c);
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
      const Algebra& gamma = gammas[gi];
      std::string tag = " gamma size " + std::to_string(n) + " #" +
                        std::to_string(gi);
      auto bimorphs = enumerate_bimorphisms(co, gamma);
      auto homs = enumerate_algebra_morphisms(co.result, gamma);
      if (bimorphs.size() != homs.size()) {
        report.add(CheckResult::fail(
            "universal-bijection-count" + tag,
            std::to_string(bimorphs.size()) + " bimorphisms vs " +
                std::to_string(homs.size()) + " algebra morphisms"));
        continue;
      }
      bool round_trips = true;
      std::set<std::vector<std::uint32_t>> images;
      for (const auto& h : bimorphs) {
        FinMap k = hat(h, co, gamma);
        images.insert(k.table);
        if (!(unhat(k, co, gamma) == h)) {
          round_trips = false;
          break;
        }
      }
      for (const auto& k : homs) {
        if (!(hat(unhat(k, co, gamma), co, gamma) == k)) {
          round_trips = false;
          break;
        }
      }
      if (round_trips && images.size() == bimorphs.size()) {
        report.add(CheckResult::pass(
            "universal-bijection" + tag,
            std::to_string(bimorphs.size()) + " morphisms each way"));
      } else {
        report.add(CheckResult::fail("universal-bijection" + tag,
                                     "hat/unhat fail to biject"));
      }
    }
  }
  return report;
}

}  // namespace

CommandResult run_command(const Workspace& ws, const CommandRequest& req) {
  CommandResult out;
  out.report["command"] = req.command;
  ordered_json inputs;
  for (const auto& [k, v] : req.args) {
    inputs[k] = v;
  }
  inputs["max_size"] = req.max_size;
  out.report["inputs"] = inputs;
  std::vector<FinSet> sets = fixtures::test_sets(req.max_size);

  auto finish = [&out](const LawReport& report) {
    out.report["checks"] = checks_json(report);
    if (!out.report.contains("artifacts")) {
      out.report["artifacts"] = ordered_json::array();
    }
    out.human = report.summary() + out.human;
    out.exit_code = report.any_failed() ? 1 : 0;
  };

  try {
    if (req.command == "check-monad") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      finish(check_monad_laws(t, sets));
    } else if (req.command == "check-morphism") {
      MonadMorphism sigma = resolve_sigma(require_arg(req, "sigma"), ws);
      finish(check_monad_morphism(sigma, sets));
    } else if (req.command == "check-strength") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      finish(check_strength_axioms(canonical_strength(t), sets));
    } else if (req.command == "check-commutative") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      CommutativityVerdict v = is_commutative(t, sets);
      LawReport report;
      if (v.commutative) {
        report.add(CheckResult::pass("commutativity", v.scope));
      } else {
        report.add(CheckResult::fail("commutativity", v.witness));
      }
      finish(report);
    } else if (req.command == "check-bimorphism") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      Algebra alpha = resolve_algebra(require_arg(req, "alpha"), t, ws);
      Algebra beta = resolve_algebra(require_arg(req, "beta"), t, ws);
      Algebra gamma = resolve_algebra(require_arg(req, "gamma"), t, ws);
      auto mi = ws.maps.find(require_arg(req, "map"));
      if (mi == ws.maps.end()) {
        throw ParseError("unknown map '" + require_arg(req, "map") + "'");
      }
      LawReport report;
      Verdict bi = is_bilinear(mi->second, t, alpha, beta, gamma);
      Verdict lc = left_component(mi->second, t, alpha, beta, gamma);
      Verdict rc = right_component(mi->second, t, alpha, beta, gamma);
      report.add(bi ? CheckResult::pass("bilinearity")
                    : CheckResult::fail("bilinearity", bi.witness));
      report.add(lc ? CheckResult::pass("left-component")
                    : CheckResult::fail("left-component", lc.witness));
      report.add(rc ? CheckResult::pass("right-component")
                    : CheckResult::fail("right-component", rc.witness));
      finish(report);
    } else if (req.command == "check-kleisli-law") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      std::string law = arg_or(req, "law", "dst");
      NatFamily fam = law == "dst"           ? dst_family(t)
                      : law == "dst-prime"   ? dst_family(t)
                      : law == "coproduct"   ? coproduct_injection_family(t)
                                             : throw ParseError(
                                                   "unknown law '" + law +
                                                   "' (dst, coproduct)");
      if (law == "dst-prime") {
        fam.component_at = [t](const Obj& a) {
          return Mor(dst_prime(t, a.parts.at(0), a.parts.at(1)));
        };
        fam.name = "dst'(" + t.name() + ")";
      }
      FunctorHandle h = law == "coproduct"
                            ? FunctorHandle::binary_coproduct()
                            : FunctorHandle::binary_product();
      MonadInstance s = product_monad({t, t});
      finish(is_kleisli_law(fam, h, s, t, tuple_objects(s, sets)));
    } else if (req.command == "check-em-law") {
      MonadMorphism sigma = resolve_sigma(require_arg(req, "sigma"), ws);
      std::vector<Obj> objects;
      for (const auto& s : sets) {
        objects.emplace_back(s);
      }
      finish(is_em_law(monad_morphism_family(sigma),
                       FunctorHandle::identity(), sigma.source, sigma.target,
                       objects));
    } else if (req.command == "lift") {
      MonadMorphism sigma = resolve_sigma(require_arg(req, "sigma"), ws);
      Algebra beta =
          resolve_algebra(require_arg(req, "algebra"), sigma.target, ws);
      LiftedAdjunction adj = lift_adjunction(sigma, sets);
      Algebra lifted = adj.right_apply(beta);
      LawReport report;
      Verdict v = is_algebra(lifted);
      report.add(v ? CheckResult::pass("lifted algebra axioms")
                   : CheckResult::fail("lifted algebra axioms", v.witness));
      ordered_json artifacts = ordered_json::array();
      artifacts.push_back(map_json("lifted_structure", lifted.structure1()));
      out.report["artifacts"] = artifacts;
      finish(report);
    } else if (req.command == "classify") {
      MonadMorphism sigma = resolve_sigma(require_arg(req, "sigma"), ws);
      Algebra alpha =
          resolve_algebra(require_arg(req, "algebra"), sigma.source, ws);
      LiftedAdjunction adj = lift_adjunction(sigma, sets);
      ClassifyingObject co = adj.left_apply(alpha);
      attach_classifying_artifacts(out, co);
      finish(universal_property_report(co, req.max_size));
    } else if (req.command == "tensor" || req.command == "coproduct-lift") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      Algebra left = resolve_algebra(require_arg(req, "left"), t, ws);
      Algebra right = resolve_algebra(require_arg(req, "right"), t, ws);
      ClassifyingObject co = req.command == "tensor"
                                 ? tensor(left, right, t)
                                 : coproduct_lift(left, right, t);
      attach_classifying_artifacts(out, co);
      finish(universal_property_report(co, req.max_size));
    } else if (req.command == "verify-universal") {
      MonadInstance t = parse_monad(require_arg(req, "monad"), ws);
      Algebra left = resolve_algebra(require_arg(req, "left"), t, ws);
      Algebra right = resolve_algebra(require_arg(req, "right"), t, ws);
      std::string h = arg_or(req, "functor", "product");
      ClassifyingObject co = h == "product" ? tensor(left, right, t)
                             : h == "coproduct"
                                 ? coproduct_lift(left, right, t)
                                 : throw ParseError("unknown functor '" + h +
                                                    "' (product, coproduct)");
      std::uint32_t max_gamma = req.max_size;
      auto gi = req.args.find("max-gamma");
      if (gi != req.args.end()) {
        max_gamma = static_cast<std::uint32_t>(std::stoul(gi->second));
      }
      attach_classifying_artifacts(out, co);
      finish(universal_property_report(co, max_gamma));
    } else if (req.command == "adjoint-lift") {
      MonadMorphism sigma = resolve_sigma(require_arg(req, "sigma"), ws);
      LiftedAdjunction adj = lift_adjunction(sigma, sets);
      LawReport report = transpose_check(sigma, sets);
      if (req.args.count("alpha") && req.args.count("beta")) {
        Algebra alpha =
            resolve_algebra(req.args.at("alpha"), sigma.source, ws);
        Algebra beta = resolve_algebra(req.args.at("beta"), sigma.target, ws);
        report.merge(verify_adjunction_bijection(adj, alpha, beta));
      }
      finish(report);
    } else {
      throw ParseError("unknown command '" + req.command + "'");
    }
  } catch (const SizeBudgetExceeded& e) {
    out.exit_code = 3;
    out.human = std::string("budget exceeded: ") + e.what() + "\n";
    out.report["error"] = e.what();
  } catch (const Error& e) {
    out.exit_code = 2;
    out.human = std::string("error: ") + e.what() + "\n";
    out.report["error"] = e.what();
  }
  return out;
}

}  // namespace bimorph
