#include "doctest.h"

#include "trilie/cochain.hpp"
#include "trilie/deform.hpp"
#include "trilie/errors.hpp"
#include "trilie/examples.hpp"
#include "trilie/graded.hpp"

using namespace trilie;

namespace {

/// The direction e2 -> e1 (all other basis vectors to zero).
LinearMap e2_to_e1() {
  LinearMap d = LinearMap::zero("E12", 4, 4);
  d.mat(0, 1) = 1;
  return d;
}

/// The direction e1 -> e1, e4 -> (1/2) e4: a cocycle that is not a
/// coboundary, so its class is nonzero.
LinearMap diag_cocycle() {
  LinearMap d = LinearMap::zero("b", 4, 4);
  d.mat(0, 0) = 1;
  d.mat(3, 3) = Rational(1, 2);
  return d;
}

LinearMap map_sum(const LinearMap& a, const LinearMap& b) {
  LinearMap out = a;
  out.mat = madd(a.mat, b.mat);
  return out;
}

} // namespace

TEST_SUITE("deformations") {

TEST_CASE("zero and coboundary directions are infinitesimal deformations") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();

  const auto zero = check_infinitesimal(
      act, {h, LinearMap::zero("0", 4, 4)});
  CHECK(zero.ok());
  CHECK(zero.routes_agree());

  // Every image of the degree-1 differential is a 2-cocycle (d^2 = 0),
  // so each wedge basis bivector yields a valid direction.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Cochain im = delta_apply(act, h, Bivector::wedge_basis(4, i, j));
      const auto v = check_infinitesimal(act, {h, map_from_cochain(im)});
      CHECK(v.ok());
      CHECK(v.routes_agree());
    }
  }
}

TEST_CASE("cocycle and non-cocycle directions are told apart") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();

  const auto good = check_infinitesimal(act, {h, e2_to_e1()});
  CHECK(good.ok());
  CHECK(good.routes_agree());

  const auto nonzero_class = check_infinitesimal(act, {h, diag_cocycle()});
  CHECK(nonzero_class.ok());

  // The identity map is not a 2-cocycle for this base: both routes must
  // reject it, and for the same reason.
  const auto bad =
      check_infinitesimal(act, {h, LinearMap::identity("id", 4)});
  CHECK_FALSE(bad.ok());
  CHECK(bad.routes_agree());
  CHECK_FALSE(bad.kernel_member);
  REQUIRE(bad.direct.violations.size() == 1);
  CHECK(bad.direct.violations[0].where == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("a base that is not crossed is rejected") {
  const Action act = examples::dim4_action();
  const DeformationCandidate c{LinearMap::identity("id", 4),
                               LinearMap::zero("0", 4, 4)};
  CHECK_THROWS_AS(check_infinitesimal(act, c), InvalidBase);
}

TEST_CASE("direct scan agrees with the twisted structure map") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const VData vd = make_v_data(act);
  const TwistedBrackets tb = twisted_brackets(vd, h);

  // A direction is an infinitesimal deformation exactly when the twisted
  // degree-1 structure map kills it.
  std::vector<LinearMap> directions = {
      LinearMap::zero("0", 4, 4), e2_to_e1(), diag_cocycle(),
      LinearMap::identity("id", 4)};
  LinearMap skew = LinearMap::zero("skew", 4, 4);
  skew.mat(1, 2) = 3;
  skew.mat(2, 1) = Rational(-1, 5);
  directions.push_back(skew);

  for (const LinearMap& d : directions) {
    const bool valid = check_infinitesimal(act, {h, d}).ok();
    const bool killed = tb.l1(cochain_from_map(d)).is_zero();
    CHECK(valid == killed);
  }
}

TEST_CASE("coboundary directions have the zero class") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Cochain im = delta_apply(act, h, Bivector::wedge_basis(4, i, j));
      const CohomologyClass cls =
          cohomology_class(act, {h, map_from_cochain(im)});
      CHECK(cls.coordinates == Vec(9));
      CHECK(cls.representative == Vec(16));
    }
  }

  // e2 -> e1 is itself a coboundary (delta of -(e3 ^ e4)), so its class
  // also vanishes even though the map looks nontrivial.
  const CohomologyClass cls = cohomology_class(act, {h, e2_to_e1()});
  CHECK(cls.coordinates == Vec(9));
}

TEST_CASE("classes are invariant under coboundary shifts") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const LinearMap b = diag_cocycle();

  const CohomologyClass base_cls = cohomology_class(act, {h, b});
  REQUIRE(base_cls.coordinates.size() == 9);
  CHECK(base_cls.coordinates != Vec(9));

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Cochain im = delta_apply(act, h, Bivector::wedge_basis(4, i, j));
      const LinearMap shifted = map_sum(b, map_from_cochain(im));
      CHECK(cohomology_class(act, {h, shifted}) == base_cls);
    }
  }
}

TEST_CASE("class computation rejects non-cocycles") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  CHECK_THROWS_AS(cohomology_class(act, {h, LinearMap::identity("id", 4)}),
                  NotACocycle);
}

TEST_CASE("equivalence is reflexive with the zero witness") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();

  const auto rep = check_equivalence(act, h, e2_to_e1(), e2_to_e1(),
                                     Bivector::zero("0", 4));
  CHECK(rep.equivalent());
  CHECK(rep.psi_g_first_order);
  CHECK(rep.psi_h_first_order);
  CHECK(rep.intertwine_first_order);
}

TEST_CASE("constructed witnesses certify and wrong witnesses fail") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const LinearMap b = diag_cocycle();

  const Bivector x = Bivector::wedge_basis(4, 1, 2); // e2 ^ e3
  const LinearMap shifted =
      map_sum(b, map_from_cochain(delta_apply(act, h, x)));

  const auto good = check_equivalence(act, h, shifted, b, x);
  CHECK(good.equivalent());

  // Swapping the directions needs the opposite witness.
  Bivector neg = x;
  for (Rational& c : neg.coeffs) c = -c;
  CHECK(check_equivalence(act, h, b, shifted, neg).equivalent());
  CHECK_FALSE(check_equivalence(act, h, b, shifted, x).equivalent());

  // A wedge with a different image under the differential fails, and the
  // report pins the basis vector where the defect shows up.
  const Bivector y = Bivector::wedge_basis(4, 1, 3); // e2 ^ e4
  const auto bad = check_equivalence(act, h, shifted, b, y);
  CHECK_FALSE(bad.equivalent());
  CHECK(bad.psi_g_first_order);
  CHECK(bad.psi_h_first_order);
  CHECK(bad.intertwine_first_order);
  REQUIRE_FALSE(bad.witness.violations.empty());
  for (const Violation& v : bad.witness.violations) {
    CHECK(v.where.size() == 1);
  }
}

TEST_CASE("first-order side conditions hold for every wedge witness") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const LinearMap zero = LinearMap::zero("0", 4, 4);

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto rep = check_equivalence(act, h, zero, zero,
                                         Bivector::wedge_basis(4, i, j));
      CHECK(rep.psi_g_first_order);
      CHECK(rep.psi_h_first_order);
      CHECK(rep.intertwine_first_order);
    }
  }
}

TEST_CASE("witness search succeeds exactly on equal classes") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const LinearMap b = diag_cocycle();
  const LinearMap zero = LinearMap::zero("0", 4, 4);

  // Shift by a coboundary: a witness exists and certifies.
  const Bivector x = Bivector::wedge_basis(4, 2, 3); // e3 ^ e4
  const LinearMap shifted =
      map_sum(b, map_from_cochain(delta_apply(act, h, x)));
  const auto found = find_equivalence_witness(act, h, shifted, b);
  REQUIRE(found.has_value());
  CHECK(check_equivalence(act, h, shifted, b, *found).equivalent());

  // e2 -> e1 is a coboundary, so it is equivalent to the zero direction.
  const auto killer = find_equivalence_witness(act, h, e2_to_e1(), zero);
  REQUIRE(killer.has_value());
  CHECK(check_equivalence(act, h, e2_to_e1(), zero, *killer).equivalent());

  // A nonzero class admits no witness against zero.
  CHECK_FALSE(find_equivalence_witness(act, h, b, zero).has_value());
}

TEST_CASE("triviality matches the class being zero") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();

  const Bivector x = Bivector::wedge_basis(4, 1, 2);
  const LinearMap dx = map_from_cochain(delta_apply(act, h, x));
  CHECK(trivial_deformation(act, {h, dx}, x).equivalent());

  // The nonzero-class direction is not trivial, whatever witness is tried.
  const LinearMap b = diag_cocycle();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK_FALSE(trivial_deformation(act, {h, b},
                                      Bivector::wedge_basis(4, i, j))
                      .equivalent());
    }
  }
}

} // TEST_SUITE
