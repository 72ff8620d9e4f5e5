#include "trilie/driver.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "trilie/deffile.hpp"
#include "trilie/deform.hpp"
#include "trilie/errors.hpp"
#include "trilie/graded.hpp"
#include "trilie/verify.hpp"

namespace trilie {

namespace {

using json = nlohmann::ordered_json;

/// Invocation problems that are the caller's fault (exit code 2).
struct UsageError {
  std::string message;
};

json rationals(const Vec& v) {
  json out = json::array();
  for (const Rational& q : v) out.push_back(to_string(q));
  return out;
}

/// Verdicts can carry one violation per scanned tuple; reports list the
/// first few and keep the exact count.
constexpr std::size_t kMaxViolations = 10;

json verdict_json(const Verdict& v) {
  json out;
  out["ok"] = v.ok();
  out["violation_count"] = v.violations.size();
  if (!v.violations.empty()) {
    json list = json::array();
    for (std::size_t i = 0;
         i < v.violations.size() && i < kMaxViolations; ++i) {
      json item;
      item["at"] = v.violations[i].where;
      item["residual"] = rationals(v.violations[i].residual);
      list.push_back(item);
    }
    out["violations"] = list;
    if (v.violations.size() > kMaxViolations) {
      out["violations_omitted"] = v.violations.size() - kMaxViolations;
    }
  }
  return out;
}

/// Maps between the algebras of an action must have the stated endpoints
/// before any check makes sense; the verifiers index by these dimensions.
void require_endpoints(const LinearMap& m, std::size_t src, std::size_t tgt,
                       const char* role) {
  if (m.source_dim != src || m.target_dim != tgt) {
    throw DimensionMismatch("map '" + m.name + "' must be " +
                            std::to_string(src) + " -> " +
                            std::to_string(tgt) + " to serve as " + role);
  }
}

bool cmd_check_algebra(const DefinitionFile& df,
                       const std::vector<std::string>& a,
                       const DriverOptions&, json& r) {
  const TriLieAlgebra& g = find_algebra(df, a[0]);
  r["algebra"] = json{{"name", g.name()}, {"dim", g.dim()}};
  const Verdict fi = check_fundamental_identity(g);
  r["fundamental_identity"] = verdict_json(fi);
  r["center_dim"] = center(g).dim();
  r["derived_dim"] = derived_algebra(g).dim();
  return fi.ok();
}

bool cmd_check_representation(const DefinitionFile& df,
                              const std::vector<std::string>& a,
                              const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  r["action"] = json{{"name", act.name},
                     {"acting", act.g.name()},
                     {"space", act.h.name()}};
  const Verdict v = check_representation(act.g, act.rho);
  r["representation"] = verdict_json(v);
  return v.ok();
}

bool cmd_check_action(const DefinitionFile& df,
                      const std::vector<std::string>& a,
                      const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  const ActionVerdict v = check_action(act);
  r["representation"] = verdict_json(v.representation);
  r["centrality"] = verdict_json(v.centrality);
  r["bracket_compatibility"] = verdict_json(v.bracket_compat);
  return v.ok();
}

bool cmd_check_crossed(const DefinitionFile& df,
                       const std::vector<std::string>& a,
                       const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap h = resolve_map(df, a[1]);
  require_endpoints(h, act.g.dim(), act.h.dim(), "a crossed homomorphism");
  const Verdict v = check_crossed(act, h);
  const GraphEmbedding ge = graph_embedding(act, h);
  r["crossed"] = verdict_json(v);
  r["graph_homomorphism"] = verdict_json(ge.hom);
  r["routes_agree"] = v.ok() == ge.hom.ok();
  return v.ok() && v.ok() == ge.hom.ok();
}

bool cmd_check_rb(const DefinitionFile& df,
                  const std::vector<std::string>& a, const DriverOptions&,
                  json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap t = resolve_map(df, a[1]);
  require_endpoints(t, act.h.dim(), act.g.dim(), "a Rota-Baxter operator");
  Rational weight(1);
  if (a.size() == 3) {
    const auto q = parse_rational(a[2]);
    if (!q) {
      throw UsageError{"weight must be a rational number, got '" + a[2] +
                       "'"};
    }
    weight = *q;
  }
  r["weight"] = to_string(weight);
  const Verdict v = check_rota_baxter(act, t, weight);
  r["rota_baxter"] = verdict_json(v);
  return v.ok();
}

bool cmd_semidirect(const DefinitionFile& df,
                    const std::vector<std::string>& a, const DriverOptions&,
                    json& r) {
  const Action act = resolve_action(df, a[0]);
  const TriLieAlgebra e =
      semidirect(act, a.size() == 2 ? a[1] : act.name + "_sum");
  r["name"] = e.name();
  r["dim"] = e.dim();
  const Verdict fi = check_fundamental_identity(e);
  r["fundamental_identity"] = verdict_json(fi);
  DefinitionFile out;
  out.algebras.push_back(e);
  r["definition"] = serialize_definition(out);
  return fi.ok();
}

bool cmd_cohomology(const DefinitionFile& df,
                    const std::vector<std::string>& a, const DriverOptions&,
                    json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap h = resolve_map(df, a[1]);
  require_endpoints(h, act.g.dim(), act.h.dim(), "a crossed homomorphism");
  if (!check_crossed(act, h).ok()) {
    throw InvalidBase("cohomology is defined for crossed homomorphisms "
                      "only; run check-crossed for the violations");
  }
  const CrossedComplex cc = crossed_complex(act, h, 3);
  json table = json::array();
  for (std::size_t n = 1; n <= 3; ++n) {
    const CohomologyDims d = cohomology_dims(cc, n);
    table.push_back(json{{"n", n},
                         {"space", d.space},
                         {"cocycles", d.cocycles},
                         {"coboundaries", d.coboundaries},
                         {"cohomology", d.cohomology}});
  }
  r["table"] = table;
  return true;
}

bool cmd_mc_check(const DefinitionFile& df,
                  const std::vector<std::string>& a, const DriverOptions&,
                  json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap h = resolve_map(df, a[1]);
  require_endpoints(h, act.g.dim(), act.h.dim(), "a Maurer-Cartan element");
  const VData vd = make_v_data(act);
  const Cochain res = mc_residual(vd, h);
  const bool zero = res.is_zero();
  const Verdict cr = check_crossed(act, h);
  r["maurer_cartan"] = zero;
  r["crossed"] = verdict_json(cr);
  r["routes_agree"] = zero == cr.ok();
  return zero && zero == cr.ok();
}

bool cmd_twisted_mc_check(const DefinitionFile& df,
                          const std::vector<std::string>& a,
                          const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap base = resolve_map(df, a[1]);
  const LinearMap dir = resolve_map(df, a[2]);
  require_endpoints(base, act.g.dim(), act.h.dim(), "the twisting element");
  require_endpoints(dir, act.g.dim(), act.h.dim(), "the shift");
  const VData vd = make_v_data(act);
  const Cochain res = twisted_mc_residual(vd, base, dir);
  const bool zero = res.is_zero();
  const LinearMap sum{base.name + "+" + dir.name, base.source_dim,
                      base.target_dim, madd(base.mat, dir.mat)};
  const Verdict cr = check_crossed(act, sum);
  r["twisted_maurer_cartan"] = zero;
  r["sum_crossed"] = verdict_json(cr);
  r["routes_agree"] = zero == cr.ok();
  return zero && zero == cr.ok();
}

bool cmd_deform_check(const DefinitionFile& df,
                      const std::vector<std::string>& a,
                      const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap base = resolve_map(df, a[1]);
  const LinearMap dir = resolve_map(df, a[2]);
  require_endpoints(base, act.g.dim(), act.h.dim(), "the deformation base");
  require_endpoints(dir, act.g.dim(), act.h.dim(), "a direction");
  const InfinitesimalVerdict iv = check_infinitesimal(act, {base, dir});
  r["direct"] = verdict_json(iv.direct);
  r["kernel_member"] = iv.kernel_member;
  r["routes_agree"] = iv.routes_agree();
  return iv.ok();
}

bool cmd_deform_class(const DefinitionFile& df,
                      const std::vector<std::string>& a,
                      const DriverOptions&, json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap base = resolve_map(df, a[1]);
  const LinearMap dir = resolve_map(df, a[2]);
  require_endpoints(base, act.g.dim(), act.h.dim(), "the deformation base");
  require_endpoints(dir, act.g.dim(), act.h.dim(), "a direction");
  const CohomologyClass cl = cohomology_class(act, {base, dir});
  r["coordinates"] = rationals(cl.coordinates);
  r["representative"] = rationals(cl.representative);
  r["trivial"] = vzero(cl.coordinates);
  return true;
}

bool cmd_equivalence(const DefinitionFile& df,
                     const std::vector<std::string>& a, const DriverOptions&,
                     json& r) {
  const Action act = resolve_action(df, a[0]);
  const LinearMap base = resolve_map(df, a[1]);
  const LinearMap dir1 = resolve_map(df, a[2]);
  const LinearMap dir2 = resolve_map(df, a[3]);
  require_endpoints(base, act.g.dim(), act.h.dim(), "the deformation base");
  require_endpoints(dir1, act.g.dim(), act.h.dim(), "a direction");
  require_endpoints(dir2, act.g.dim(), act.h.dim(), "a direction");

  const auto record = [&r](const EquivalenceReport& er) {
    r["witness_condition"] = verdict_json(er.witness);
    r["first_order"] = json{{"psi_g", er.psi_g_first_order},
                            {"psi_h", er.psi_h_first_order},
                            {"intertwine", er.intertwine_first_order}};
    r["equivalent"] = er.equivalent();
    return er.equivalent();
  };

  if (a.size() == 5) {
    const Bivector x = resolve_bivector(df, a[4]);
    if (x.alg_dim != act.g.dim()) {
      throw DimensionMismatch("witness '" + x.name +
                              "' lives in the wrong algebra");
    }
    r["witness"] = a[4];
    return record(check_equivalence(act, base, dir1, dir2, x));
  }

  // No witness given: validate the directions the same way
  // check_equivalence would, then solve for one.
  for (const LinearMap* d : {&dir1, &dir2}) {
    if (!check_infinitesimal(act, {base, *d}).ok()) {
      throw NotACocycle("direction '" + d->name +
                        "' is not a 2-cocycle of the base");
    }
  }
  const auto x = find_equivalence_witness(act, base, dir1, dir2);
  r["witness_found"] = x.has_value();
  if (!x) {
    r["equivalent"] = false;
    return false;
  }
  r["witness_coefficients"] = rationals(x->coeffs);
  return record(check_equivalence(act, base, dir1, dir2, *x));
}

bool cmd_verify_theorems(const DefinitionFile&,
                         const std::vector<std::string>&,
                         const DriverOptions& opt, json& r) {
  r["seed"] = opt.seed;
  r["trials"] = opt.trials;
  const std::vector<PropertyResult> results =
      run_properties(opt.seed, opt.trials);
  json props = json::array();
  std::size_t passed = 0;
  for (const PropertyResult& p : results) {
    props.push_back(
        json{{"name", p.name}, {"pass", p.pass}, {"detail", p.detail}});
    passed += p.pass ? 1 : 0;
  }
  r["properties"] = props;
  r["passed"] = passed;
  r["failed"] = results.size() - passed;
  return passed == results.size();
}

struct CommandSpec {
  const char* name;
  const char* args;
  const char* brief;
  std::size_t min_args;
  std::size_t max_args;
  bool needs_definition;
  bool (*run)(const DefinitionFile&, const std::vector<std::string>&,
              const DriverOptions&, json&);
};

const CommandSpec kCommands[] = {
    {"check-algebra", "<algebra>",
     "fundamental identity, center, and derived ideal", 1, 1, true,
     cmd_check_algebra},
    {"check-representation", "<action>", "the two representation equations",
     1, 1, true, cmd_check_representation},
    {"check-action", "<action>",
     "representation, centrality, and bracket compatibility", 1, 1, true,
     cmd_check_action},
    {"check-crossed", "<action> <map>",
     "crossed-homomorphism equation plus the graph-embedding route", 2, 2,
     true, cmd_check_crossed},
    {"check-rb", "<action> <map> [weight]",
     "relative Rota-Baxter equation (default weight 1)", 2, 3, true,
     cmd_check_rb},
    {"semidirect", "<action> [name]",
     "materialize the semidirect sum and re-check its identity", 1, 2, true,
     cmd_semidirect},
    {"cohomology", "<action> <map>",
     "space/cocycle/coboundary/cohomology dimensions for n = 1..3", 2, 2,
     true, cmd_cohomology},
    {"mc-check", "<action> <map>",
     "Maurer-Cartan residual, cross-checked against check-crossed", 2, 2,
     true, cmd_mc_check},
    {"twisted-mc-check", "<action> <base> <direction>",
     "twisted Maurer-Cartan residual against the shifted crossed check", 3,
     3, true, cmd_twisted_mc_check},
    {"deform-check", "<action> <base> <direction>",
     "2-cocycle test for a first-order deformation, two routes", 3, 3, true,
     cmd_deform_check},
    {"deform-class", "<action> <base> <direction>",
     "canonical cohomology-class coordinates of a direction", 3, 3, true,
     cmd_deform_class},
    {"equivalence", "<action> <base> <dir1> <dir2> [witness]",
     "first-order equivalence; solves for a witness when none is given", 4,
     5, true, cmd_equivalence},
    {"verify-theorems", "",
     "randomized structural invariant suite (no definition file needed)", 0,
     0, false, cmd_verify_theorems},
};

const CommandSpec* find_spec(const std::string& name) {
  for (const CommandSpec& c : kCommands) {
    if (name == c.name) return &c;
  }
  return nullptr;
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const NotInvertible*>(&e)) return "NotInvertible";
  if (dynamic_cast<const InvalidBase*>(&e)) return "InvalidBase";
  if (dynamic_cast<const NotACocycle*>(&e)) return "NotACocycle";
  if (dynamic_cast<const NotMaurerCartan*>(&e)) return "NotMaurerCartan";
  if (dynamic_cast<const DegreeMismatch*>(&e)) return "DegreeMismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const NotASubspace*>(&e)) return "NotASubspace";
  if (dynamic_cast<const InvalidStructure*>(&e)) return "InvalidStructure";
  return "Error";
}

// --- plain-text rendering ------------------------------------------------

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const json& v) {
  for (const json& e : v) {
    if (!is_scalar(e)) return false;
  }
  return true;
}

std::string scalar_str(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_member(std::ostream& out, const std::string& key, const json& v,
                   std::size_t indent) {
  const std::string pad(2 * indent, ' ');
  if (is_scalar(v)) {
    const std::string s = scalar_str(v);
    if (v.is_string() && s.find('\n') != std::string::npos) {
      out << pad << key << ": |\n";
      std::istringstream in(s);
      std::string line;
      while (std::getline(in, line)) out << pad << "  " << line << "\n";
    } else {
      out << pad << key << ": " << s << "\n";
    }
    return;
  }
  if (v.is_array() && is_flat_array(v)) {
    out << pad << key << ": [";
    bool first = true;
    for (const json& e : v) {
      if (!first) out << ", ";
      out << scalar_str(e);
      first = false;
    }
    out << "]\n";
    return;
  }
  if (v.is_array()) {
    out << pad << key << ":\n";
    for (const json& e : v) {
      if (is_scalar(e)) {
        out << pad << "  - " << scalar_str(e) << "\n";
        continue;
      }
      // Render the element's members two levels deep, then turn the
      // first line's leading spaces into the list bullet.
      std::ostringstream buf;
      for (const auto& [k2, v2] : e.items()) {
        render_member(buf, k2, v2, indent + 2);
      }
      std::string block = buf.str();
      block[2 * indent + 2] = '-';
      out << block;
    }
    return;
  }
  out << pad << key << ":\n";
  for (const auto& [k2, v2] : v.items()) {
    render_member(out, k2, v2, indent + 1);
  }
}

std::string render_text(const json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) render_member(out, k, v, 0);
  return out.str();
}

} // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const CommandSpec& c : kCommands) out.emplace_back(c.name);
  return out;
}

std::string command_usage(const std::string& command) {
  const CommandSpec* spec = find_spec(command);
  if (spec == nullptr) return "";
  std::string args(spec->args);
  return (args.empty() ? "" : args + " ") + "-- " + spec->brief;
}

RunResult run_command(const std::string& command,
                      const std::vector<std::string>& args,
                      const std::optional<std::string>& definition_text,
                      const DriverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["command"] = command;
  report["arguments"] = args;
  int exit_code = 0;
  try {
    const CommandSpec* spec = find_spec(command);
    if (spec == nullptr) {
      throw UsageError{"unknown command '" + command + "'"};
    }
    if (args.size() < spec->min_args || args.size() > spec->max_args) {
      throw UsageError{"usage: " + command +
                       (spec->args[0] == '\0' ? "" : " ") + spec->args};
    }
    DefinitionFile df;
    if (definition_text) {
      df = parse_definition(*definition_text);
    } else if (spec->needs_definition) {
      throw UsageError{command + " requires a definition file"};
    }
    const bool valid = spec->run(df, args, options, report);
    report["valid"] = valid;
    exit_code = valid ? 0 : 1;
  } catch (const UsageError& e) {
    report["error"] = json{{"kind", "Usage"}, {"message", e.message}};
    report["valid"] = false;
    exit_code = 2;
  } catch (const ParseError& e) {
    report["error"] = json{{"kind", "ParseError"},
                           {"code", e.code},
                           {"line", e.line},
                           {"message", e.what()}};
    report["valid"] = false;
    exit_code = 2;
  } catch (const UnknownName& e) {
    report["error"] = json{{"kind", "UnknownName"}, {"message", e.what()}};
    report["valid"] = false;
    exit_code = 2;
  } catch (const Error& e) {
    report["error"] =
        json{{"kind", error_kind(e)}, {"message", e.what()}};
    report["valid"] = false;
    exit_code = 1;
  }
  if (options.timing) {
    report["elapsed_ms"] = std::chrono::duration_cast<
                               std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  }
  report["exit"] = exit_code;
  const std::string out = options.format == ReportFormat::json
                              ? report.dump(2) + "\n"
                              : render_text(report);
  return RunResult{exit_code, out};
}

} // namespace trilie
