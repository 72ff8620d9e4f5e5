// Python bindings for the exact-arithmetic core. The module exposes the
// driver operations one-to-one — every subcommand of the command-line
// tool is callable as run(name, ...) — plus small helpers for working
// with definition files. Reports come back as the same text or JSON the
// tool prints, so results stay exact (rationals as strings) instead of
// being squeezed through floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "trilie/deffile.hpp"
#include "trilie/driver.hpp"
#include "trilie/errors.hpp"
#include "trilie/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic toolkit for finite-dimensional 3-Lie algebras";

  // Malformed definition text reads best as a ValueError; the message
  // already carries the 1-based line number and the stable error code.
  py::register_exception<trilie::ParseError>(m, "ParseError",
                                             PyExc_ValueError);

  m.def("commands", &trilie::command_names,
        "Names of the available operations, in the order the "
        "command-line tool lists them.");
  m.def("usage", &trilie::command_usage, py::arg("command"),
        "One-line argument summary for an operation.");
  m.def(
      "run",
      [](const std::string& command, const std::vector<std::string>& args,
         const std::optional<std::string>& definition, std::uint64_t seed,
         std::size_t trials, bool timing, const std::string& format) {
        trilie::DriverOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.timing = timing;
        if (format == "json") {
          opt.format = trilie::ReportFormat::json;
        } else if (format != "text") {
          throw py::value_error("format must be 'text' or 'json'");
        }
        const trilie::RunResult res =
            trilie::run_command(command, args, definition, opt);
        return py::make_tuple(res.exit_code, res.output);
      },
      py::arg("command"), py::arg("args") = std::vector<std::string>{},
      py::arg("definition") = std::nullopt, py::arg("seed") = 0,
      py::arg("trials") = 20, py::arg("timing") = false,
      py::arg("format") = "text",
      "Run one operation and return (exit_code, report). The report is "
      "the text or JSON the command-line tool would print; exit code 0 "
      "means every check passed, 1 a failed check or domain error, 2 a "
      "usage error.");
  m.def(
      "canonicalize",
      [](const std::string& definition) {
        return trilie::serialize_definition(
            trilie::parse_definition(definition));
      },
      py::arg("definition"),
      "Parse definition text and return it in canonical form; raises "
      "ParseError (a ValueError) on malformed input.");
  m.def("property_names", &trilie::property_names,
        "Names of the randomized verification properties behind "
        "verify-theorems.");
}
