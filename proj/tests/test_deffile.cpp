#include <doctest.h>

#include <string>

#include "trilie/combin.hpp"
#include "trilie/deffile.hpp"
#include "trilie/errors.hpp"
#include "trilie/examples.hpp"

using namespace trilie;

namespace {

/// The worked instance as definition text: the dim-4 algebra with
/// [e2,e3,e4] = e1, the adjoint action, the diagonal crossed map, and a
/// sample bivector.
const char* kWorked = R"(# worked instance
algebra g
dim 4
bracket 2 3 4 = 1*e1
end

action ad on g by g
adjoint
end

map H from g to g
e2 -> 1*e2
e3 -> 1*e3
e4 -> -1*e4
end

bivector X in g
1*e1^e2 + -1/2*e3^e4
)";

std::string code_of(const std::string& text) {
  try {
    parse_definition(text);
  } catch (const ParseError& e) {
    return e.code;
  }
  return "(no error)";
}

} // namespace

TEST_SUITE("definition_files") {
  TEST_CASE("the worked instance parses and resolves") {
    DefinitionFile df = parse_definition(kWorked);
    REQUIRE(df.algebras.size() == 1);
    REQUIRE(df.actions.size() == 1);
    REQUIRE(df.maps.size() == 1);
    REQUIRE(df.bivectors.size() == 1);

    const TriLieAlgebra& g = find_algebra(df, "g");
    CHECK(g.dim() == 4);
    CHECK(g.bracket_basis(1, 2, 3) == basis_vec(4, 0));
    CHECK(check_fundamental_identity(g).ok());

    Action act = resolve_action(df, "ad");
    CHECK(act.g.name() == "g");
    CHECK(act.h.name() == "g");
    // The adjoint line fills in ad(e_i, e_j) = [e_i, e_j, -].
    const Representation ad = adjoint_rep(g);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        CHECK(act.rho.pair_matrix(i, j) == ad.pair_matrix(i, j));
      }
    }
    CHECK(check_action(act).ok());

    LinearMap h = resolve_map(df, "H");
    CHECK(h.source_dim == 4);
    CHECK(h.target_dim == 4);
    CHECK(h.mat(0, 0) == 0);
    CHECK(h.mat(1, 1) == 1);
    CHECK(h.mat(2, 2) == 1);
    CHECK(h.mat(3, 3) == -1);
    CHECK(check_crossed(act, h).ok());

    Bivector x = resolve_bivector(df, "X");
    CHECK(x.alg_dim == 4);
    CHECK(x.coeffs[pair_rank(4, 0, 1)] == 1);
    CHECK(x.coeffs[pair_rank(4, 2, 3)] == Rational(-1, 2));
    CHECK(x.coeffs[pair_rank(4, 0, 2)] == 0);
  }

  TEST_CASE("serialization is a fixpoint of parse-then-serialize") {
    const std::string once = serialize_definition(parse_definition(kWorked));
    const std::string twice = serialize_definition(parse_definition(once));
    CHECK(once == twice);
    // The canonical text still resolves to the same objects.
    DefinitionFile df = parse_definition(once);
    CHECK(find_algebra(df, "g").bracket_basis(1, 2, 3) == basis_vec(4, 0));
    CHECK(resolve_map(df, "H").mat(3, 3) == -1);
  }

  TEST_CASE("explicit rho lines, multi-term combos, and zero combos") {
    DefinitionFile df = parse_definition(R"(
algebra a
dim 3
bracket 1 2 3 = 2*e1 + -1/3*e2
end

algebra b
dim 2
end

action r on b by a
rho 1 2 : e1 -> 1*e1 + 1*e2
rho 1 3 : e2 -> 0
rho 2 3 : e1 -> -5/7*e2
end

map f from a to b
e1 -> 1*e1
e3 -> 0
end
)");
    const TriLieAlgebra& a = find_algebra(df, "a");
    CHECK(a.bracket_basis(0, 1, 2) == Vec{2, Rational(-1, 3), 0});
    CHECK(find_algebra(df, "b").dim() == 2); // no bracket lines: abelian
    CHECK(vzero(find_algebra(df, "b").bracket_basis(0, 1, 1)));

    Action r = resolve_action(df, "r");
    CHECK(r.rho.apply_basis(0, 1, basis_vec(2, 0)) == Vec{1, 1});
    CHECK(vzero(r.rho.apply_basis(0, 2, basis_vec(2, 1))));
    CHECK(r.rho.apply_basis(1, 2, basis_vec(2, 0)) ==
          Vec{0, Rational(-5, 7)});
    // Unmentioned columns are zero, and indices swap with a sign.
    CHECK(vzero(r.rho.apply_basis(0, 1, basis_vec(2, 1))));
    CHECK(r.rho.apply_basis(1, 0, basis_vec(2, 0)) == Vec{-1, -1});

    LinearMap f = resolve_map(df, "f");
    CHECK(f.target_dim == 2);
    CHECK(f.mat.col(0) == Vec{1, 0});
    CHECK(vzero(f.mat.col(1))); // unmentioned
    CHECK(vzero(f.mat.col(2))); // explicit 0
  }

  TEST_CASE("bare basis terms default the coefficient to one") {
    DefinitionFile df = parse_definition(
        "algebra g\ndim 4\nbracket 2 3 4 = e1\nend\n"
        "bivector y in g\ne1^e3\n");
    CHECK(find_algebra(df, "g").bracket_basis(1, 2, 3) == basis_vec(4, 0));
    CHECK(resolve_bivector(df, "y").coeffs[pair_rank(4, 0, 2)] == 1);
  }

  TEST_CASE("repeated terms accumulate") {
    DefinitionFile df = parse_definition(
        "algebra g\ndim 3\nbracket 1 2 3 = 1*e1 + 1*e1 + -1/2*e1\nend\n");
    CHECK(find_algebra(df, "g").bracket_basis(0, 1, 2) ==
          Vec{Rational(3, 2), 0, 0});
  }

  TEST_CASE("parse errors carry a stable code and the offending line") {
    CHECK(code_of("algebra g\ndim 4\nbracket 3 2 4 = 1*e1\nend\n") ==
          "NonIncreasingTriple");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 2 4 = 1*e1\nend\n") ==
          "NonIncreasingTriple");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 5 = 1*e1\nend\n") ==
          "IndexOutOfRange");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 4 = 1*e7\nend\n") ==
          "IndexOutOfRange");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 4 = 1/0*e1\nend\n") ==
          "BadRational");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 4 = x*e1\nend\n") ==
          "BadRational");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 4 = 1*e1 +\nend\n") ==
          "UnexpectedToken");
    CHECK(code_of("algebra g\ndim 0\nend\n") == "UnexpectedToken");
    CHECK(code_of("algebra g\nbracket 2 3 4 = 1*e1\nend\n") ==
          "UnexpectedToken");
    CHECK(code_of("widget w\n") == "UnexpectedToken");
    CHECK(code_of("algebra g\ndim 4\nend\nalgebra g\ndim 2\nend\n") ==
          "DuplicateName");
    CHECK(code_of("algebra g\ndim 4\nend\nmap g from g to g\nend\n") ==
          "DuplicateName");
    CHECK(code_of("action r on g by g\nend\n") == "UnknownName");
    CHECK(code_of("algebra g\ndim 4\nend\nmap f from g to h\nend\n") ==
          "UnknownName");
    CHECK(code_of("algebra g\ndim 4\nbracket 2 3 4 = 1*e1\n") ==
          "UnexpectedEnd");
    CHECK(code_of("algebra g\ndim 2\nend\nalgebra h\ndim 2\nend\n"
                  "action r on g by h\nadjoint\nend\n") ==
          "AdjointMismatch");
    CHECK(code_of("algebra g\ndim 4\nend\nbivector x in g\n1*e3^e2\n") ==
          "NonIncreasingPair");
    CHECK(code_of("algebra g\ndim 4\nend\nbivector x in g\n1*e2\n") ==
          "UnexpectedToken");
    CHECK(code_of("algebra g\ndim 4\nend\n"
                  "action r on g by g\nrho 2 1 : e1 -> 1*e1\nend\n") ==
          "NonIncreasingPair");

    try {
      parse_definition("algebra g\ndim 4\n\n# comment\nbracket 1 2 = x\n");
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.line == 5); // blank lines and comments still count
      CHECK(e.code == "UnexpectedToken");
    }
  }

  TEST_CASE("resolution of undeclared names throws UnknownName") {
    DefinitionFile df = parse_definition(kWorked);
    CHECK_THROWS_AS((void)find_algebra(df, "nope"), UnknownName);
    CHECK_THROWS_AS((void)resolve_action(df, "nope"), UnknownName);
    CHECK_THROWS_AS((void)resolve_map(df, "nope"), UnknownName);
    CHECK_THROWS_AS((void)resolve_bivector(df, "nope"), UnknownName);
  }

  TEST_CASE("serializing explicit rho actions round-trips") {
    DefinitionFile df;
    df.algebras.push_back(examples::dim4_algebra());
    DefinitionFile::ActionEntry entry;
    entry.name = "r";
    entry.h = df.algebras[0].name();
    entry.g = entry.h;
    entry.rho = adjoint_rep(df.algebras[0]);
    df.actions.push_back(entry);

    const std::string text = serialize_definition(df);
    DefinitionFile back = parse_definition(text);
    Action r = resolve_action(back, "r");
    const Representation ad = adjoint_rep(df.algebras[0]);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        CHECK(r.rho.pair_matrix(i, j) == ad.pair_matrix(i, j));
      }
    }
    CHECK(text == serialize_definition(back));
  }

  TEST_CASE("zero maps and zero bivectors serialize as bare zeros") {
    DefinitionFile df;
    df.algebras.push_back(examples::dim4_algebra());
    DefinitionFile::MapEntry m;
    m.name = "z";
    m.from = m.to = df.algebras[0].name();
    m.mat = Matrix(4, 4);
    df.maps.push_back(m);
    DefinitionFile::BivectorEntry b;
    b.name = "zero";
    b.algebra = df.algebras[0].name();
    b.coeffs = Vec(n_pairs(4));
    df.bivectors.push_back(b);

    const std::string text = serialize_definition(df);
    DefinitionFile back = parse_definition(text);
    CHECK(resolve_map(back, "z").mat.is_zero());
    CHECK(vzero(resolve_bivector(back, "zero").coeffs));
    CHECK(text == serialize_definition(back));
  }
}
