#pragma once

#include <stdexcept>
#include <string>

namespace trilie {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions (vector lengths, matrix shapes,
/// algebra dimensions, cochain degrees).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A matrix or linear map required to be invertible is singular.
struct NotInvertible : Error {
  using Error::Error;
};

/// quotient_dim was asked for U/W where W is not contained in U.
struct NotASubspace : Error {
  using Error::Error;
};

/// A name referenced on the command line or in a definition file is not
/// declared.
struct UnknownName : Error {
  using Error::Error;
};

/// twisted_brackets requires a Maurer-Cartan element (a crossed
/// homomorphism); the supplied map is not one.
struct NotMaurerCartan : Error {
  using Error::Error;
};

/// Graded elements combined with inconsistent degrees or over different
/// base spaces.
struct DegreeMismatch : Error {
  using Error::Error;
};

/// A deformation's base map is not a crossed homomorphism.
struct InvalidBase : Error {
  using Error::Error;
};

/// A deformation direction offered to a class or equivalence computation
/// is not a 2-cocycle of the crossed complex.
struct NotACocycle : Error {
  using Error::Error;
};

/// Data offered as an algebraic structure fails its defining axioms
/// (e.g. building V-data from an invalid action).
struct InvalidStructure : Error {
  using Error::Error;
};

/// Definition-file syntax or consistency error. `code` is a stable
/// machine-readable tag (e.g. "NonIncreasingTriple", "UnknownName",
/// "BadRational", "IndexOutOfRange", "UnexpectedToken", "DuplicateName").
struct ParseError : Error {
  ParseError(std::size_t line_no, std::string tag, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + tag + ": " + what),
        line(line_no),
        code(std::move(tag)) {}

  std::size_t line;
  std::string code;
};

} // namespace trilie
