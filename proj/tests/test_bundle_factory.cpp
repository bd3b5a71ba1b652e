#include <doctest.h>

#include "oracles.hpp"
#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"
#include "torus_mirror/torus.hpp"

using namespace torus_mirror;

namespace {

const QComplex kI = QComplex::i();

Biholomorphism example_phi() {
  return biholomorphism(ComplexMatrix{{kI, QComplex(1)}, {QComplex(-1), kI}}, IntMatrix{{0, 0}, {0, 1}});
}

const IntMatrix kA1{{0, 1}, {1, 1}};
const IntMatrix kA2{{1, 1}, {1, -1}};

}  // namespace

TEST_SUITE("bundle_factory") {
  TEST_CASE("rank agrees with both oracles") {
    Rng rng(41);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 1 + k % 3;
      const IntMatrix a = random_int_matrix(rng, n, n, 6);
      const long r = 1 + k % 6;
      const Integer rp = compute_rank(r, a).rprime;
      CHECK(rp == oracle::rank_from_divisors(r, a));
      CHECK(rp == oracle::rank_by_counting(r, a));
    }
    CHECK(compute_rank(1, IntMatrix(2, 2)).rprime == 1);
    CHECK(compute_rank(2, kA1).rprime == 4);
    CHECK(compute_rank(3, IntMatrix{{0, 2}, {2, 2}}).rprime == 9);
    CHECK_THROWS_AS(compute_rank(0, kA1), std::invalid_argument);
  }

  TEST_CASE("unitary sets satisfy their relations with size r'") {
    Rng rng(42);
    for (int k = 0; k < 80; ++k) {
      const std::size_t n = 1 + k % 3;
      const IntMatrix a = random_int_matrix(rng, n, n, 3);
      const Integer r = 1 + k % 4;
      const UnitarySet set = build_unitary_set(r, a);
      REQUIRE(set.V.size() == n);
      REQUIRE(set.U.size() == n);
      CHECK(Integer(static_cast<unsigned long>(set.V[0].size())) == set.rprime());
      CHECK(verify_unitary_set(set, a).ok());
      IntMatrix delta(n, n);
      for (std::size_t i = 0; i < n; ++i) delta(i, (i + 1) % n) = rng.uniform_int(0, 1);
      CHECK(verify_pullback_unitaries(pullback_unitaries(set, delta), r, a, delta).ok());
    }
  }

  TEST_CASE("worked example: A1 T' symmetric, A2 T' not") {
    const Biholomorphism phi = example_phi();
    CHECK(is_holomorphic(kA1, phi.Tprime));
    CHECK_FALSE(is_holomorphic(kA2, phi.Tprime));
    CHECK(holomorphic_conditions(kA1, phi.T, phi.delta).both());
    CHECK_FALSE(holomorphic_conditions(kA2, phi.T, phi.delta).both());
    CHECK(antisymmetric_part_times_two(curvature_02_part(kA1, phi.Tprime)).is_zero());
    CHECK_FALSE(antisymmetric_part_times_two(curvature_02_part(kA2, phi.Tprime)).is_zero());
  }

  TEST_CASE("mu splits into p + T'^t q and back") {
    const Biholomorphism phi = example_phi();
    const RationalVector p{Rational(1, 3), Rational(-2)}, q{Rational(5, 7), Rational(0)};
    const BundleSpec spec = make_bundle_spec(2, kA1, phi.Tprime, p, q);
    const auto [p2, q2] = split_mu(spec.mu(), phi.Tprime);
    CHECK(p2 == p);
    CHECK(q2 == q);
  }

  TEST_CASE("pulled-back connection is projectively flat exactly when holomorphic") {
    const Biholomorphism phi = example_phi();
    const BundleSpec good = make_bundle_spec(1, kA1, phi.Tprime, RationalVector(2), RationalVector(2));
    const ConnectionData cg = pullback_connection(good, phi);
    CHECK(cg.chain_rule_ok);
    CHECK(cg.z02_times_2pi.is_zero());
    CHECK(cg.z20_times_2pi.is_zero());
    CHECK(cg.z11_times_2pi == cg.z11_expected_times_2pi);
    const BundleSpec bad = make_bundle_spec(1, kA2, phi.Tprime, RationalVector(2), RationalVector(2));
    CHECK_FALSE(pullback_connection(bad, phi).z02_times_2pi.is_zero());
  }

  TEST_CASE("determinant phases lie in [0, 1)") {
    const UnitarySet set = build_unitary_set(3, IntMatrix{{0, 2}, {2, 2}});
    const DetPhases ph = det_phases(set.V, set.U);
    for (const auto& t : ph.xi_turns) CHECK((t >= 0 && t < 1));
    for (const auto& t : ph.theta_turns) CHECK((t >= 0 && t < 1));
  }
}
