#include <doctest.h>

#include "trilie/errors.hpp"
#include "trilie/examples.hpp"
#include "trilie/graded.hpp"

using namespace trilie;

namespace {

// Wraps a basis index of E = g (+) h (dim 4 + 4) into its g/h parts.
Vec g_part(std::size_t idx) {
  Vec v(4);
  if (idx < 4) v[idx] = 1;
  return v;
}
Vec h_part(std::size_t idx) {
  Vec v(4);
  if (idx >= 4) v[idx - 4] = 1;
  return v;
}

// Embeds an h-coordinate vector into E.
Vec into_h_block(const Vec& v) {
  Vec out(8);
  for (std::size_t i = 0; i < 4; ++i) out[4 + i] = v[i];
  return out;
}

} // namespace

TEST_SUITE("linf_engine") {
  TEST_CASE("shuffle enumeration: counts and signs") {
    CHECK(shuffles(0, 0).size() == 1);
    CHECK(shuffles(0, 0)[0].sign == 1);
    CHECK(shuffles(3, 2).size() == 10); // C(5,3)

    auto sh11 = shuffles(1, 1);
    REQUIRE(sh11.size() == 2);
    CHECK(sh11[0].left == std::vector<std::size_t>{0});
    CHECK(sh11[0].right == std::vector<std::size_t>{1});
    CHECK(sh11[0].sign == 1);
    CHECK(sh11[1].left == std::vector<std::size_t>{1});
    CHECK(sh11[1].right == std::vector<std::size_t>{0});
    CHECK(sh11[1].sign == -1);

    // (2,1)-shuffles of {0,1,2}: signs alternate with the insertion point.
    auto sh21 = shuffles(2, 1);
    REQUIRE(sh21.size() == 3);
    CHECK(sh21[0].left == std::vector<std::size_t>{0, 1});
    CHECK(sh21[0].sign == 1);
    CHECK(sh21[1].left == std::vector<std::size_t>{0, 2});
    CHECK(sh21[1].sign == -1);
    CHECK(sh21[2].left == std::vector<std::size_t>{1, 2});
    CHECK(sh21[2].sign == 1);
  }

  TEST_CASE("composing with the identity map triples a bracket") {
    TriLieAlgebra g = examples::dim4_algebra();
    GradedElement mu = GradedElement::bracket_element(g);
    GradedElement id =
        GradedElement::from_cochain(cochain_from_map(LinearMap::identity(
            "id", 4)));
    GradedElement triple = compose(mu, id);
    CHECK(triple.degree() == 1);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          CHECK(triple.eval_basis({i, j, k}) ==
                vscale(3, g.bracket_basis(i, j, k)));
        }
      }
    }
  }

  TEST_CASE("the master equation holds exactly for valid data") {
    VData vd = make_v_data(examples::dim4_action());
    GradedElement dd = nr_bracket(vd.Delta, vd.Delta);
    CHECK(dd.degree() == 2);
    CHECK(dd.materialize().is_zero());
  }

  TEST_CASE("any skew trilinear bracket on a 3-dim space is a "
            "Maurer-Cartan element") {
    TriLieAlgebra t("t", 3);
    t.set_basis_bracket(0, 1, 2, Vec{Rational(5, 3), -1, 4});
    GradedElement mu = GradedElement::bracket_element(t);
    CHECK(nr_bracket(mu, mu).materialize().is_zero());
  }

  TEST_CASE("a fundamental-identity violation shows up in the bracket") {
    TriLieAlgebra bad = examples::dim4_fi_violation();
    REQUIRE(!check_fundamental_identity(bad).ok());
    GradedElement mu = GradedElement::bracket_element(bad);
    GradedElement dd = nr_bracket(mu, mu);
    CHECK(!dd.materialize().is_zero());
    // [mu,mu] = -2 (identity residual): the violating scan tuple
    // (e3,e4 | e1,e2 | e3) carries residual e1.
    CHECK(dd.eval_basis({2, 3, 0, 1, 2}) == vscale(-2, basis_vec(4, 0)));
    // [P,P] = 2 P.P in odd degree, visible on a nonzero bracket.
    CHECK(dd.materialize().coeffs ==
          vscale(2, compose(mu, mu).materialize().coeffs));
  }

  TEST_CASE("v-data construction rejects invalid actions") {
    Action act = examples::dim4_action();
    act.rho.pair_matrix(0, 1)(1, 1) = 1; // not central, breaks the axioms
    CHECK_THROWS_AS(make_v_data(act), InvalidStructure);
  }

  TEST_CASE("the semidirect element splits as pi + rho + mu") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    // The pure-bracket pieces come from degenerate actions.
    Action pi_only{"pi", act.g, TriLieAlgebra::abelian("0", 4),
                   Representation(4, 4)};
    Action mu_only{"mu", TriLieAlgebra::abelian("0", 4), act.h,
                   Representation(4, 4)};
    GradedElement delta_pi =
        GradedElement::bracket_element(semidirect(pi_only));
    GradedElement delta_mu =
        GradedElement::bracket_element(semidirect(mu_only));
    GradedElement rho_piece = graded_add(
        vd.Delta,
        graded_scale(-1, graded_add(delta_pi, delta_mu)));

    SUBCASE("the remainder is exactly the action terms") {
      // rho(x,y)w lands in h for one h-argument in the last slot.
      Vec v = rho_piece.eval_basis({1, 2, 7}); // (e2, e3, u4)
      CHECK(v == into_h_block(examples::dim4_algebra().bracket_basis(1, 2,
                                                                     3)));
      // No pure-g or pure-h contributions remain.
      CHECK(vzero(rho_piece.eval_basis({1, 2, 3})));
      CHECK(vzero(rho_piece.eval_basis({5, 6, 7})));
    }

    SUBCASE("the three pieces are in the kernel of the projection "
            "and the kernel is closed under the bracket") {
      CHECK(project_relative(vd, vd.Delta).is_zero());
      CHECK(project_relative(vd, delta_pi).is_zero());
      CHECK(project_relative(vd, delta_mu).is_zero());
      CHECK(project_relative(vd, rho_piece).is_zero());
      CHECK(project_relative(vd, nr_bracket(vd.Delta, delta_mu)).is_zero());
      CHECK(project_relative(vd, nr_bracket(delta_pi, delta_mu)).is_zero());
      CHECK(
          project_relative(vd, nr_bracket(rho_piece, delta_pi)).is_zero());
    }
  }

  TEST_CASE("embedded relative cochains project back and commute") {
    VData vd = make_v_data(examples::dim4_action());
    Cochain f = cochain_from_map(examples::dim4_crossed_map());
    CochainSpace s2(4, 4, 2);
    Cochain f2 = cochain_add(
        Cochain::unit(s2, triple_rank(4, 1, 2, 3) * 4 + 0),
        cochain_scale(Rational(-1, 2),
                      Cochain::unit(s2, triple_rank(4, 0, 1, 2) * 4 + 2)));

    SUBCASE("degree-0 embedding ignores the h component") {
      GradedElement e = embed_relative(vd, f);
      CHECK(e.degree() == 0);
      // i(H)(x + u) = Hx placed in the h block.
      Vec arg(8);
      arg[1] = 1; // e2
      arg[6] = 5; // 5 u3, ignored
      CHECK(e.eval({arg}) == into_h_block(basis_vec(4, 1)));
    }

    SUBCASE("project after embed is the identity") {
      CHECK(project_relative(vd, embed_relative(vd, f)).coeffs == f.coeffs);
      CHECK(project_relative(vd, embed_relative(vd, f2)).coeffs ==
            f2.coeffs);
    }

    SUBCASE("the relative cochains form an abelian subalgebra") {
      GradedElement b = nr_bracket(embed_relative(vd, f),
                                   embed_relative(vd, f2));
      CHECK(b.materialize().is_zero());
    }
  }

  TEST_CASE("the unary derived bracket matches its displayed formula") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    for (const LinearMap& H :
         {examples::dim4_crossed_map(), LinearMap::identity("id", 4)}) {
      Cochain l1 = derived_bracket_l1(vd, cochain_from_map(H));
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          for (std::size_t k = j + 1; k < 4; ++k) {
            Vec expect = act.rho.apply_basis(j, k, H.apply_basis(i));
            vaxpy(expect, 1, act.rho.apply_basis(i, j, H.apply_basis(k)));
            vaxpy(expect, -1, act.rho.apply_basis(i, k, H.apply_basis(j)));
            vaxpy(expect, -1, H.apply(act.g.bracket_basis(i, j, k)));
            CHECK(l1.eval_basis({i, j, k}) == expect);
          }
        }
      }
    }
    // The worked value: l1(H)(e2, e3, e4) = e1.
    Cochain l1 = derived_bracket_l1(
        vd, cochain_from_map(examples::dim4_crossed_map()));
    CHECK(l1.eval_basis({1, 2, 3}) == basis_vec(4, 0));
  }

  TEST_CASE("the inner double bracket evaluates as the displayed "
            "h-bilinear combination") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    LinearMap H = examples::dim4_crossed_map();
    GradedElement ih = embed_relative(vd, cochain_from_map(H));
    GradedElement inner = nr_bracket(nr_bracket(vd.Delta, ih), ih);
    // [[Delta, i(H)], i(H)](x+u, y+v, z+w)
    //   = 2([Hx,Hy,w]_h + [Hx,v,Hz]_h + [u,Hy,Hz]_h) over the full basis.
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        for (std::size_t c = b + 1; c < 8; ++c) {
          Vec hx = H.apply(g_part(a)), hy = H.apply(g_part(b)),
              hz = H.apply(g_part(c));
          Vec expect = act.h.bracket(hx, hy, h_part(c));
          vaxpy(expect, 1, act.h.bracket(hx, h_part(b), hz));
          vaxpy(expect, 1, act.h.bracket(h_part(a), hy, hz));
          CHECK(inner.eval_basis({a, b, c}) ==
                into_h_block(vscale(2, expect)));
        }
      }
    }
  }

  TEST_CASE("the triple bracket is six times the h-bracket of images") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    LinearMap H = examples::dim4_crossed_map();
    GradedElement ih = embed_relative(vd, cochain_from_map(H));
    GradedElement triple =
        nr_bracket(nr_bracket(nr_bracket(vd.Delta, ih), ih), ih);
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        for (std::size_t c = b + 1; c < 8; ++c) {
          Vec expect = vscale(6, act.h.bracket(H.apply(g_part(a)),
                                               H.apply(g_part(b)),
                                               H.apply(g_part(c))));
          CHECK(triple.eval_basis({a, b, c}) == into_h_block(expect));
        }
      }
    }
  }

  TEST_CASE("ternary derived bracket is symmetric in its arguments") {
    VData vd = make_v_data(examples::dim4_action());
    Cochain a = cochain_from_map(examples::dim4_crossed_map());
    Cochain b = cochain_from_map(LinearMap::identity("id", 4));
    LinearMap cm = LinearMap::zero("c", 4, 4);
    cm.mat(0, 1) = 2;
    cm.mat(2, 3) = Rational(-1, 3);
    Cochain c = cochain_from_map(cm);
    Cochain ref = derived_bracket_l3(vd, a, b, c);
    CHECK(derived_bracket_l3(vd, a, c, b).coeffs == ref.coeffs);
    CHECK(derived_bracket_l3(vd, b, a, c).coeffs == ref.coeffs);
    CHECK(derived_bracket_l3(vd, c, b, a).coeffs == ref.coeffs);
  }

  TEST_CASE("the binary and quaternary derived brackets vanish") {
    VData vd = make_v_data(examples::dim4_action());
    Cochain a = cochain_from_map(examples::dim4_crossed_map());
    Cochain b = cochain_from_map(LinearMap::identity("id", 4));
    CochainSpace s2(4, 4, 2);
    Cochain f2 = Cochain::unit(s2, triple_rank(4, 0, 1, 3) * 4 + 1);
    CHECK(derived_bracket(vd, {a, b}).is_zero());
    CHECK(derived_bracket(vd, {a, f2}).is_zero());
    CHECK(derived_bracket(vd, {f2, f2}).is_zero());
    CHECK(derived_bracket(vd, {a, b, a, b}).is_zero());
    CHECK(derived_bracket(vd, {b, a, f2, a}).is_zero());
  }

  TEST_CASE("Maurer-Cartan residual detects crossed homomorphisms") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);

    SUBCASE("the example map is a Maurer-Cartan element") {
      CHECK(mc_residual(vd, examples::dim4_crossed_map()).is_zero());
      CHECK(mc_residual(vd, LinearMap::zero("0", 4, 4)).is_zero());
    }

    SUBCASE("the identity map is not, and the residual is minus the "
            "crossed residual") {
      LinearMap id = LinearMap::identity("id", 4);
      Cochain r = mc_residual(vd, id);
      CHECK(!r.is_zero());
      CHECK(r.eval_basis({1, 2, 3}) == vscale(3, basis_vec(4, 0)));
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          for (std::size_t k = j + 1; k < 4; ++k) {
            CHECK(r.eval_basis({i, j, k}) ==
                  vscale(-1, crossed_residual(act, id, i, j, k)));
          }
        }
      }
    }
  }

  TEST_CASE("graded skew-symmetry and the Leibniz identity hold "
            "pointwise") {
    VData vd = make_v_data(examples::dim4_action());
    GradedElement d = vd.Delta; // degree 1
    GradedElement h0 = embed_relative(
        vd, cochain_from_map(examples::dim4_crossed_map())); // degree 0
    CochainSpace s2(4, 4, 2);
    GradedElement f1 = embed_relative(
        vd, Cochain::unit(s2, triple_rank(4, 1, 2, 3) * 4 + 0)); // degree 1

    const std::vector<Vec> args3 = {Vec{1, 0, 2, 0, 0, 1, 0, 0},
                                    Vec{0, 1, 0, 0, 3, 0, 0, 0},
                                    Vec{0, 0, 1, 1, 0, 0, Rational(1, 2),
                                        0}};
    const std::vector<Vec> args5 = {
        args3[0], args3[1], args3[2], Vec{0, 2, 0, 1, 0, 0, 0, 1},
        Vec{1, 1, 0, 0, 0, 0, 1, 0}};

    SUBCASE("skew-symmetry") {
      // [P,Q] + (-1)^{pq} [Q,P] = 0 for (p,q) = (1,0), (1,1).
      GradedElement s1 = graded_add(nr_bracket(d, h0), nr_bracket(h0, d));
      CHECK(vzero(s1.eval(args3)));
      GradedElement s2e = graded_add(
          nr_bracket(d, f1), graded_scale(-1, nr_bracket(f1, d)));
      CHECK(vzero(s2e.eval(args5)));
    }

    SUBCASE("Leibniz form of the Jacobi identity") {
      // [P,[Q,R]] = [[P,Q],R] + (-1)^{pq} [Q,[P,R]]
      // degrees (0,0,1):
      GradedElement id0 = embed_relative(
          vd, cochain_from_map(LinearMap::identity("id", 4)));
      GradedElement lhs1 = nr_bracket(h0, nr_bracket(id0, d));
      GradedElement rhs1 = graded_add(nr_bracket(nr_bracket(h0, id0), d),
                                      nr_bracket(id0, nr_bracket(h0, d)));
      CHECK(lhs1.eval(args3) == rhs1.eval(args3));
      // degrees (0,1,1):
      GradedElement lhs2 = nr_bracket(h0, nr_bracket(d, f1));
      GradedElement rhs2 = graded_add(nr_bracket(nr_bracket(h0, d), f1),
                                      nr_bracket(d, nr_bracket(h0, f1)));
      CHECK(lhs2.eval(args5) == rhs2.eval(args5));
      // degrees (1,1,1):
      GradedElement lhs3 = nr_bracket(d, nr_bracket(f1, d));
      GradedElement rhs3 = graded_add(
          nr_bracket(nr_bracket(d, f1), d),
          graded_scale(-1, nr_bracket(f1, nr_bracket(d, d))));
      const std::vector<Vec> args7 = {
          args5[0], args5[1], args5[2], args5[3], args5[4],
          Vec{0, 0, 0, 2, 1, 0, 0, 0}, Vec{1, 0, 0, 0, 0, 0, 0, 3}};
      CHECK(lhs3.eval(args7) == rhs3.eval(args7));
    }
  }

  TEST_CASE("bracket results respect the cochain symmetry type") {
    VData vd = make_v_data(examples::dim4_action());
    LinearMap H = examples::dim4_crossed_map();
    GradedElement b = nr_bracket(vd.Delta,
                                 embed_relative(vd, cochain_from_map(H)));
    // Degree 1: all three slots totally skew.
    Vec x{1, 0, 0, 2, 0, 1, 0, 0}, y{0, 1, 0, 0, 0, 0, 1, 0},
        z{0, 0, 1, 0, Rational(1, 2), 0, 0, 1};
    Vec v = b.eval({x, y, z});
    CHECK(b.eval({y, x, z}) == vscale(-1, v));
    CHECK(b.eval({y, z, x}) == v);
    CHECK(b.eval({z, y, x}) == vscale(-1, v));
    CHECK(vzero(b.eval({x, x, z})));

    // Degree 2: skew within each pair, tail group totally skew.
    CochainSpace s2(4, 4, 2);
    GradedElement f1 = embed_relative(
        vd, Cochain::unit(s2, triple_rank(4, 0, 2, 3) * 4 + 1));
    GradedElement k = nr_bracket(vd.Delta, f1);
    Vec w{2, 0, 0, 1, 1, 0, 0, 0};
    Vec kv = k.eval({x, y, z, w, v});
    CHECK(k.eval({y, x, z, w, v}) == vscale(-1, kv));
    CHECK(k.eval({x, y, w, z, v}) == vscale(-1, kv));
    CHECK(k.eval({x, y, w, v, z}) == kv); // even rotation of the tail
    CHECK(vzero(k.eval({x, y, z, z, v})));
  }

  TEST_CASE("twisting requires a Maurer-Cartan element") {
    VData vd = make_v_data(examples::dim4_action());
    CHECK_THROWS_AS(twisted_brackets(vd, LinearMap::identity("id", 4)),
                    NotMaurerCartan);
  }

  TEST_CASE("the twisted unary bracket computes the crossed coboundary") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    LinearMap H = examples::dim4_crossed_map();
    TwistedBrackets tb = twisted_brackets(vd, H);
    Representation rho_H = induced_representation(act, H);

    // d_{rho_H} f = (-1)^{n-1} l1_H f, full bases in degrees 1 and 2.
    for (std::size_t n = 1; n <= 2; ++n) {
      CochainSpace s(4, 4, n);
      const Rational sign = (n % 2 == 1) ? 1 : -1;
      for (std::size_t c = 0; c < s.dim(); ++c) {
        Cochain f = Cochain::unit(s, c);
        CHECK(coboundary(act.g, rho_H, f).coeffs ==
              vscale(sign, tb.l1(f).coeffs));
      }
    }
    // Spot checks in degree 3 (the full sweep runs in the acceptance
    // suite).
    CochainSpace s3(4, 4, 3);
    for (std::size_t c : {0u, 17u, 40u, 95u}) {
      Cochain f = Cochain::unit(s3, c);
      CHECK(coboundary(act.g, rho_H, f).coeffs == tb.l1(f).coeffs);
    }
  }

  TEST_CASE("the untwisted unary bracket computes the plain coboundary") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    for (std::size_t n = 1; n <= 2; ++n) {
      CochainSpace s(4, 4, n);
      const Rational sign = (n % 2 == 1) ? 1 : -1;
      for (std::size_t c = 0; c < s.dim(); ++c) {
        Cochain f = Cochain::unit(s, c);
        CHECK(coboundary(act.g, act.rho, f).coeffs ==
              vscale(sign, derived_bracket_l1(vd, f).coeffs));
      }
    }
  }

  TEST_CASE("twisted binary bracket is symmetric on degree-0 arguments") {
    VData vd = make_v_data(examples::dim4_action());
    TwistedBrackets tb =
        twisted_brackets(vd, examples::dim4_crossed_map());
    LinearMap am = LinearMap::zero("a", 4, 4);
    am.mat(0, 2) = 1;
    am.mat(1, 1) = Rational(2, 7);
    Cochain a = cochain_from_map(am);
    Cochain b = cochain_from_map(LinearMap::identity("id", 4));
    CHECK(tb.l2(a, b).coeffs == tb.l2(b, a).coeffs);
    CHECK(tb.l3(a, b, a).coeffs == derived_bracket_l3(vd, a, b, a).coeffs);
  }

  TEST_CASE("twisted Maurer-Cartan residual classifies deformed maps") {
    Action act = examples::dim4_action();
    VData vd = make_v_data(act);
    LinearMap H = examples::dim4_crossed_map();

    SUBCASE("zero and minus-H deformations") {
      CHECK(twisted_mc_residual(vd, H, LinearMap::zero("0", 4, 4))
                .is_zero());
      LinearMap minus{"-H", 4, 4, mscale(-1, H.mat)};
      CHECK(twisted_mc_residual(vd, H, minus).is_zero());
    }

    SUBCASE("the residual is the Maurer-Cartan residual of the sum") {
      LinearMap h2 = LinearMap::zero("h2", 4, 4);
      h2.mat(0, 1) = 1; // stays within the variety's linear directions
      h2.mat(1, 0) = 1; // leaves it: the first column must vanish below
                        // the corner
      LinearMap sum{"H+h2", 4, 4, madd(H.mat, h2.mat)};
      CHECK(twisted_mc_residual(vd, H, h2).coeffs ==
            mc_residual(vd, sum).coeffs);
      CHECK(!twisted_mc_residual(vd, H, h2).is_zero());
      CHECK(check_crossed(act, sum).ok() ==
            twisted_mc_residual(vd, H, h2).is_zero());

      // A deformation that stays on the variety: diag(2,1,1,-1) has
      // corner 2 = tr + det of its block.
      LinearMap good = examples::dim4_family_map(
          Matrix::identity(3), Vec{0, 0, 0});
      LinearMap diff{"d", 4, 4, msub(good.mat, H.mat)};
      CHECK(check_crossed(act, good).ok());
      CHECK(twisted_mc_residual(vd, H, diff).is_zero());
    }
  }
}
