#include "doctest.h"

#include "trilie/examples.hpp"
#include "trilie/sampling.hpp"
#include "trilie/verify.hpp"

using namespace trilie;

TEST_SUITE("sampling_and_verify") {

TEST_CASE("the random source is deterministic and streams are separated") {
  DetRng a(123), b(123);
  for (int i = 0; i < 50; ++i) CHECK(a.raw() == b.raw());

  CHECK(substream(42, "alpha") == substream(42, "alpha"));
  CHECK(substream(42, "alpha") != substream(42, "beta"));
  CHECK(substream(42, "alpha") != substream(43, "alpha"));

  DetRng c(7);
  for (int i = 0; i < 20; ++i) {
    const Rational q = c.nonzero_rational();
    CHECK(q != 0);
    CHECK(determinant(c.invertible(3)) != 0);
  }
}

TEST_CASE("sampled instances pass the validators they were built for") {
  DetRng rng(substream(99, "instances"));
  for (int t = 0; t < 12; ++t) {
    const samples::Instance inst = samples::instance(rng);
    CHECK(inst.act.g.dim() + inst.act.h.dim() <= 8);
    CHECK(check_fundamental_identity(inst.act.g).ok());
    CHECK(check_action(inst.act).ok());
    CHECK(check_crossed(inst.act, inst.crossed).ok());
  }
}

TEST_CASE("family samplers land on and off the variety as labeled") {
  const Action act = examples::dim4_action();
  DetRng rng(substream(99, "family"));
  for (int t = 0; t < 15; ++t) {
    CHECK(check_crossed(act, samples::family_member(rng)).ok());
    CHECK_FALSE(
        check_crossed_family_constraints(samples::family_violation(rng).mat)
            .ok());
    const LinearMap inv = samples::invertible_family_member(rng);
    CHECK(determinant(inv.mat) != 0);
    CHECK(check_crossed(act, inv).ok());
    const LinearMap bad = samples::invertible_non_crossed(rng);
    CHECK(determinant(bad.mat) != 0);
    CHECK_FALSE(check_crossed(act, bad).ok());
  }
}

TEST_CASE("sampled automorphisms preserve the bracket") {
  const TriLieAlgebra g = examples::dim4_algebra();
  DetRng rng(substream(99, "autos"));
  for (const bool sparse : {false, true}) {
    for (int t = 0; t < 8; ++t) {
      const LinearMap psi = samples::dim4_automorphism(rng, sparse);
      CHECK(determinant(psi.mat) != 0);
      CHECK(check_homomorphism(psi, g, g).ok());
    }
  }
}

TEST_CASE("kernel-sampled directions are always cocycles") {
  const Action act = examples::dim4_action();
  const LinearMap h = examples::dim4_crossed_map();
  const Matrix d2 =
      coboundary_matrix(act.g, induced_representation(act, h), 4, 1);
  DetRng rng(substream(99, "cocycles"));
  for (int t = 0; t < 10; ++t) {
    const LinearMap dir = samples::kernel_cocycle(rng, act, h);
    CHECK(vzero(mul(d2, cochain_from_map(dir).coeffs)));
  }
}

TEST_CASE("the invariant suite passes and is reproducible") {
  const auto names = property_names();
  CHECK(names.size() == 26);

  const auto first = run_properties(42, 5);
  REQUIRE(first.size() == names.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CAPTURE(first[i].name);
    CHECK(first[i].name == names[i]);
    CHECK(first[i].pass);
    CHECK_FALSE(first[i].detail.empty());
  }

  const auto second = run_properties(42, 5);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].pass == second[i].pass);
    CHECK(first[i].detail == second[i].detail);
  }

  // A different seed exercises different samples but the laws still hold.
  for (const auto& r : run_properties(7, 3)) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

} // TEST_SUITE
