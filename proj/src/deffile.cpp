#include "trilie/deffile.hpp"

#include <sstream>

#include "trilie/combin.hpp"
#include "trilie/errors.hpp"

namespace trilie {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

/// Reads the definition text line by line, tracking the 1-based position
/// for error reports. Comments and blank lines are invisible to callers.
class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      lines_.push_back(trim(line));
    }
  }

  DefinitionFile parse() {
    while (const auto* line = peek()) {
      const auto head = tokenize(*line);
      if (head[0] == "algebra") {
        parse_algebra(head);
      } else if (head[0] == "action") {
        parse_action(head);
      } else if (head[0] == "map") {
        parse_map(head);
      } else if (head[0] == "bivector") {
        parse_bivector(head);
      } else {
        fail("UnexpectedToken", "expected a top-level declaration, got '" +
                                    head[0] + "'");
      }
    }
    return std::move(df_);
  }

 private:
  [[noreturn]] void fail(std::string code, const std::string& what) const {
    throw ParseError(line_no_ + 1, std::move(code), what);
  }

  /// Next nonempty line, or null at end of input; does not advance, but
  /// does point error reports at the line it returns.
  const std::string* peek() {
    while (pos_ < lines_.size() && lines_[pos_].empty()) ++pos_;
    line_no_ = pos_;
    return pos_ < lines_.size() ? &lines_[pos_] : nullptr;
  }

  std::string next_in_block(const char* block) {
    const std::string* line = peek();
    if (line == nullptr) {
      fail("UnexpectedEnd", std::string("unterminated ") + block + " block");
    }
    ++pos_;
    return *line;
  }

  std::size_t parse_size(const std::string& t, const char* what) {
    std::size_t value = 0, used = 0;
    try {
      if (t.empty() || t[0] < '0' || t[0] > '9') throw std::exception();
      value = std::stoul(t, &used);
    } catch (const std::exception&) {
      used = std::string::npos; // force the error path below
    }
    if (used != t.size() || value == 0) {
      fail("UnexpectedToken", std::string(what) + " must be a positive "
                                                  "integer, got '" +
                                  t + "'");
    }
    return value;
  }

  /// "e<k>" with 1 <= k <= dim, returning the 0-based index.
  std::size_t parse_basis(const std::string& t, std::size_t dim) {
    if (t.size() < 2 || t[0] != 'e') {
      fail("UnexpectedToken", "expected a basis vector like e2, got '" +
                                  t + "'");
    }
    const std::size_t k = parse_size(t.substr(1), "basis index");
    if (k > dim) {
      fail("IndexOutOfRange", "basis index " + std::to_string(k) +
                                  " exceeds dimension " +
                                  std::to_string(dim));
    }
    return k - 1;
  }

  Rational parse_coef(const std::string& t) {
    const auto q = parse_rational(t);
    if (!q) fail("BadRational", "cannot parse coefficient '" + t + "'");
    return *q;
  }

  /// "<coef>*e<l> + ..." or "e<l> + ..." or the single token "0", as a
  /// coordinate vector of the given length.
  Vec parse_combo(const std::string& text, std::size_t dim) {
    Vec v(dim);
    if (trim(text) == "0") return v;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto plus = text.find('+', start);
      if (plus == std::string::npos) plus = text.size();
      const std::string term = trim(text.substr(start, plus - start));
      if (term.empty()) fail("UnexpectedToken", "empty term in combination");
      const auto star = term.find('*');
      const Rational c =
          star == std::string::npos ? Rational(1)
                                    : parse_coef(trim(term.substr(0, star)));
      const std::string basis =
          star == std::string::npos ? term : trim(term.substr(star + 1));
      v[parse_basis(basis, dim)] += c;
      start = plus + 1;
    }
    return v;
  }

  /// "<coef>*e<i>^e<j> + ..." or "0", as a pair-rank coefficient vector.
  Vec parse_wedge_combo(const std::string& text, std::size_t dim) {
    Vec v(n_pairs(dim));
    if (trim(text) == "0") return v;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto plus = text.find('+', start);
      if (plus == std::string::npos) plus = text.size();
      const std::string term = trim(text.substr(start, plus - start));
      if (term.empty()) fail("UnexpectedToken", "empty term in combination");
      const auto star = term.find('*');
      const Rational c =
          star == std::string::npos ? Rational(1)
                                    : parse_coef(trim(term.substr(0, star)));
      const std::string wedge =
          star == std::string::npos ? term : trim(term.substr(star + 1));
      const auto caret = wedge.find('^');
      if (caret == std::string::npos) {
        fail("UnexpectedToken", "expected e<i>^e<j>, got '" + wedge + "'");
      }
      const std::size_t i = parse_basis(trim(wedge.substr(0, caret)), dim);
      const std::size_t j = parse_basis(trim(wedge.substr(caret + 1)), dim);
      if (i >= j) {
        fail("NonIncreasingPair", "wedge indices must satisfy i < j");
      }
      v[pair_rank(dim, i, j)] += c;
      start = plus + 1;
    }
    return v;
  }

  void check_fresh_name(const std::string& name) {
    bool taken = false;
    for (const auto& a : df_.algebras) taken = taken || a.name() == name;
    for (const auto& a : df_.actions) taken = taken || a.name == name;
    for (const auto& m : df_.maps) taken = taken || m.name == name;
    for (const auto& b : df_.bivectors) taken = taken || b.name == name;
    if (taken) fail("DuplicateName", "'" + name + "' is already declared");
  }

  const TriLieAlgebra& algebra_ref(const std::string& name) {
    for (const auto& a : df_.algebras) {
      if (a.name() == name) return a;
    }
    fail("UnknownName", "algebra '" + name + "' is not declared");
  }

  void parse_algebra(const std::vector<std::string>& head) {
    if (head.size() != 2) {
      fail("UnexpectedToken", "usage: algebra <name>");
    }
    check_fresh_name(head[1]);
    ++pos_;

    const auto dim_line = tokenize(next_in_block("algebra"));
    if (dim_line.size() != 2 || dim_line[0] != "dim") {
      fail("UnexpectedToken", "algebra body must start with: dim <d>");
    }
    TriLieAlgebra g(head[1], parse_size(dim_line[1], "dimension"));

    for (;;) {
      const std::string line = next_in_block("algebra");
      if (line == "end") break;
      const auto eq = line.find('=');
      const auto toks = tokenize(
          eq == std::string::npos ? line : line.substr(0, eq));
      if (toks.size() != 4 || toks[0] != "bracket" ||
          eq == std::string::npos) {
        fail("UnexpectedToken",
             "expected: bracket <i> <j> <k> = <combo>, or end");
      }
      std::size_t idx[3];
      for (int s = 0; s < 3; ++s) {
        const std::size_t k = parse_size(toks[s + 1], "bracket index");
        if (k > g.dim()) {
          fail("IndexOutOfRange", "bracket index " + std::to_string(k) +
                                      " exceeds dimension " +
                                      std::to_string(g.dim()));
        }
        idx[s] = k - 1;
      }
      if (!(idx[0] < idx[1] && idx[1] < idx[2])) {
        fail("NonIncreasingTriple",
             "bracket indices must satisfy i < j < k");
      }
      g.set_basis_bracket(idx[0], idx[1], idx[2],
                          parse_combo(line.substr(eq + 1), g.dim()));
    }
    df_.algebras.push_back(std::move(g));
  }

  void parse_action(const std::vector<std::string>& head) {
    if (head.size() != 6 || head[2] != "on" || head[4] != "by") {
      fail("UnexpectedToken", "usage: action <name> on <h> by <g>");
    }
    check_fresh_name(head[1]);
    DefinitionFile::ActionEntry entry;
    entry.name = head[1];
    entry.h = head[3];
    entry.g = head[5];
    const std::size_t dh = algebra_ref(entry.h).dim();
    const std::size_t dg = algebra_ref(entry.g).dim();
    entry.rho = Representation(dg, dh);
    ++pos_;

    for (;;) {
      const std::string line = next_in_block("action");
      if (line == "end") break;
      if (line == "adjoint") {
        if (entry.h != entry.g) {
          fail("AdjointMismatch",
               "the adjoint action requires acting on the algebra itself");
        }
        entry.adjoint = true;
        entry.rho = adjoint_rep(algebra_ref(entry.g));
        continue;
      }
      const auto colon = line.find(':');
      const auto arrow = line.find("->");
      const auto toks = tokenize(
          colon == std::string::npos ? line : line.substr(0, colon));
      if (toks.size() != 3 || toks[0] != "rho" ||
          colon == std::string::npos || arrow == std::string::npos ||
          arrow < colon) {
        fail("UnexpectedToken",
             "expected: rho <i> <j> : e<k> -> <combo>, adjoint, or end");
      }
      const std::size_t i = parse_size(toks[1], "rho index");
      const std::size_t j = parse_size(toks[2], "rho index");
      if (i > dg || j > dg) {
        fail("IndexOutOfRange", "rho pair exceeds the acting dimension");
      }
      if (i >= j) {
        fail("NonIncreasingPair", "rho pair must satisfy i < j");
      }
      const std::size_t k = parse_basis(
          trim(line.substr(colon + 1, arrow - colon - 1)), dh);
      entry.rho.pair_matrix(i - 1, j - 1)
          .set_col(k, parse_combo(line.substr(arrow + 2), dh));
    }
    df_.actions.push_back(std::move(entry));
  }

  void parse_map(const std::vector<std::string>& head) {
    if (head.size() != 6 || head[2] != "from" || head[4] != "to") {
      fail("UnexpectedToken", "usage: map <name> from <g> to <h>");
    }
    check_fresh_name(head[1]);
    DefinitionFile::MapEntry entry;
    entry.name = head[1];
    entry.from = head[3];
    entry.to = head[5];
    const std::size_t src = algebra_ref(entry.from).dim();
    const std::size_t tgt = algebra_ref(entry.to).dim();
    entry.mat = Matrix(tgt, src);
    ++pos_;

    for (;;) {
      const std::string line = next_in_block("map");
      if (line == "end") break;
      const auto arrow = line.find("->");
      if (arrow == std::string::npos) {
        fail("UnexpectedToken", "expected: e<i> -> <combo>, or end");
      }
      const std::size_t i = parse_basis(trim(line.substr(0, arrow)), src);
      entry.mat.set_col(i, parse_combo(line.substr(arrow + 2), tgt));
    }
    df_.maps.push_back(std::move(entry));
  }

  void parse_bivector(const std::vector<std::string>& head) {
    if (head.size() != 4 || head[2] != "in") {
      fail("UnexpectedToken", "usage: bivector <name> in <g>");
    }
    check_fresh_name(head[1]);
    DefinitionFile::BivectorEntry entry;
    entry.name = head[1];
    entry.algebra = head[3];
    const std::size_t d = algebra_ref(entry.algebra).dim();
    ++pos_;
    entry.coeffs = parse_wedge_combo(next_in_block("bivector"), d);
    df_.bivectors.push_back(std::move(entry));
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0; // line owning any error raised right now
  DefinitionFile df_;
};

void write_combo(std::ostream& out, const Vec& v) {
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << " + ";
    out << to_string(v[i]) << "*e" << i + 1;
    first = false;
  }
  if (first) out << "0";
}

} // namespace

DefinitionFile parse_definition(const std::string& text) {
  return Parser(text).parse();
}

std::string serialize_definition(const DefinitionFile& df) {
  std::ostringstream out;
  bool first_block = true;
  const auto gap = [&] {
    if (!first_block) out << "\n";
    first_block = false;
  };

  for (const TriLieAlgebra& g : df.algebras) {
    gap();
    out << "algebra " << g.name() << "\n";
    out << "dim " << g.dim() << "\n";
    for (std::size_t r = 0; r < n_triples(g.dim()); ++r) {
      const Vec& value = g.structure_at(r);
      if (vzero(value)) continue;
      const auto [i, j, k] = triple_unrank(g.dim(), r);
      out << "bracket " << i + 1 << " " << j + 1 << " " << k + 1 << " = ";
      write_combo(out, value);
      out << "\n";
    }
    out << "end\n";
  }

  for (const auto& a : df.actions) {
    gap();
    out << "action " << a.name << " on " << a.h << " by " << a.g << "\n";
    if (a.adjoint) {
      out << "adjoint\n";
    } else {
      const std::size_t dg = a.rho.alg_dim();
      for (std::size_t i = 0; i < dg; ++i) {
        for (std::size_t j = i + 1; j < dg; ++j) {
          const Matrix& m = a.rho.pair_matrix(i, j);
          for (std::size_t k = 0; k < m.cols(); ++k) {
            const Vec col = m.col(k);
            if (vzero(col)) continue;
            out << "rho " << i + 1 << " " << j + 1 << " : e" << k + 1
                << " -> ";
            write_combo(out, col);
            out << "\n";
          }
        }
      }
    }
    out << "end\n";
  }

  for (const auto& m : df.maps) {
    gap();
    out << "map " << m.name << " from " << m.from << " to " << m.to << "\n";
    for (std::size_t c = 0; c < m.mat.cols(); ++c) {
      const Vec col = m.mat.col(c);
      if (vzero(col)) continue;
      out << "e" << c + 1 << " -> ";
      write_combo(out, col);
      out << "\n";
    }
    out << "end\n";
  }

  for (const auto& b : df.bivectors) {
    gap();
    out << "bivector " << b.name << " in " << b.algebra << "\n";
    const std::size_t d = find_algebra(df, b.algebra).dim();
    bool first = true;
    std::ostringstream combo;
    for (std::size_t r = 0; r < b.coeffs.size(); ++r) {
      if (b.coeffs[r] == 0) continue;
      const auto [i, j] = pair_unrank(d, r);
      if (!first) combo << " + ";
      combo << to_string(b.coeffs[r]) << "*e" << i + 1 << "^e" << j + 1;
      first = false;
    }
    out << (first ? "0" : combo.str()) << "\n";
  }
  return out.str();
}

const TriLieAlgebra& find_algebra(const DefinitionFile& df,
                                  const std::string& name) {
  for (const TriLieAlgebra& g : df.algebras) {
    if (g.name() == name) return g;
  }
  throw UnknownName("algebra '" + name + "' is not declared");
}

Action resolve_action(const DefinitionFile& df, const std::string& name) {
  for (const auto& a : df.actions) {
    if (a.name == name) {
      return Action{a.name, find_algebra(df, a.g), find_algebra(df, a.h),
                    a.rho};
    }
  }
  throw UnknownName("action '" + name + "' is not declared");
}

LinearMap resolve_map(const DefinitionFile& df, const std::string& name) {
  for (const auto& m : df.maps) {
    if (m.name == name) {
      return LinearMap{m.name, find_algebra(df, m.from).dim(),
                       find_algebra(df, m.to).dim(), m.mat};
    }
  }
  throw UnknownName("map '" + name + "' is not declared");
}

Bivector resolve_bivector(const DefinitionFile& df,
                          const std::string& name) {
  for (const auto& b : df.bivectors) {
    if (b.name == name) {
      return Bivector{b.name, find_algebra(df, b.algebra).dim(), b.coeffs};
    }
  }
  throw UnknownName("bivector '" + name + "' is not declared");
}

} // namespace trilie
