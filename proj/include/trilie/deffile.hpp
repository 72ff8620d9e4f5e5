#pragma once

#include <string>
#include <vector>

#include "trilie/algebra.hpp"

namespace trilie {

/// In-memory form of a definition file: named algebras, actions, linear
/// maps, and bivectors, in declaration order. Cross-references are
/// resolved while parsing, so every stored object is dimensionally
/// consistent; validity of the defining identities is checked by the
/// subcommands, not the parser.
struct DefinitionFile {
  struct ActionEntry {
    std::string name;
    std::string h; // acted-on algebra
    std::string g; // acting algebra
    bool adjoint = false;
    Representation rho; // filled in either way
  };
  struct MapEntry {
    std::string name;
    std::string from; // source algebra name
    std::string to;   // target algebra name
    Matrix mat;       // dim(to) x dim(from)
  };
  struct BivectorEntry {
    std::string name;
    std::string algebra;
    Vec coeffs; // pair-rank order
  };

  std::vector<TriLieAlgebra> algebras;
  std::vector<ActionEntry> actions;
  std::vector<MapEntry> maps;
  std::vector<BivectorEntry> bivectors;
};

/// Parses the one-directive-per-line text format ('#' starts a comment,
/// indices are 1-based):
///
///   algebra <name>
///   dim <d>
///   bracket <i> <j> <k> = <coef>*e<l> [+ <coef>*e<l> ...]
///   end
///
///   action <name> on <h> by <g>
///   rho <i> <j> : e<k> -> <combo>     (or the single line: adjoint)
///   end
///
///   map <name> from <g> to <h>
///   e<i> -> <combo>
///   end
///
///   bivector <name> in <g>
///   <coef>*e<i>^e<j> [+ ...]
///
/// Unmentioned brackets, images, and coefficients are zero; a combo may
/// also be the single token 0. Throws ParseError with a 1-based line
/// number and a stable code on malformed input, unknown or duplicate
/// names, and out-of-range indices.
DefinitionFile parse_definition(const std::string& text);

/// Canonical text for a definition file; parse_definition round-trips it
/// to an equivalent file (same names, dimensions, and coefficients).
std::string serialize_definition(const DefinitionFile& df);

/// Lookups by name; throw UnknownName when absent.
const TriLieAlgebra& find_algebra(const DefinitionFile& df,
                                  const std::string& name);
Action resolve_action(const DefinitionFile& df, const std::string& name);
LinearMap resolve_map(const DefinitionFile& df, const std::string& name);
Bivector resolve_bivector(const DefinitionFile& df, const std::string& name);

} // namespace trilie
