#include <doctest.h>

#include "oracles.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/gcs.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"
#include "torus_mirror/torus.hpp"

using namespace torus_mirror;

namespace {

const QComplex kI = QComplex::i();

ComplexMatrix example_T() { return ComplexMatrix{{kI, QComplex(1)}, {QComplex(-1), kI}}; }

std::size_t ones(const IntMatrix& d) {
  std::size_t c = 0;
  for (const auto& v : d.data()) {
    REQUIRE((v == 0 || v == 1));
    c += v == 1;
  }
  return c;
}

}  // namespace

TEST_SUITE("torus_geometry") {
  TEST_CASE("worked example: delta = diag(0,1), det(T - delta) = -i, T' = [[1+i,i],[-i,1]]") {
    const DeltaShift d = find_delta(example_T());
    CHECK(d.delta == IntMatrix{{0, 0}, {0, 1}});
    CHECK(d.rank == 1);
    CHECK(oracle::det(example_T() - to_complex(d.delta)) == QComplex(Rational(0), Rational(-1)));
    const Biholomorphism phi = biholomorphism(example_T(), d.delta);
    CHECK(phi.Tprime == ComplexMatrix{{QComplex(1) + kI, kI}, {-kI, QComplex(1)}});
    CHECK(check_biholomorphism(phi).ok());
  }

  TEST_CASE("nonsingular T gives delta = 0") {
    Rng rng(31);
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix T = random_pd_period(rng, 1 + k % 4);
      if (oracle::det(T).is_zero()) continue;
      CHECK(find_delta(T).delta.is_zero());
    }
  }

  TEST_CASE("singular families: det(T - delta) != 0 with n - rank unit entries") {
    Rng rng(32);
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t rank = (n + 1) / 2; rank < n; ++rank)
        for (int k = 0; k < 10; ++k) {
          const ComplexMatrix T = random_singular_pd(rng, n, rank);
          REQUIRE(oracle::rank(T) == rank);
          const DeltaShift d = find_delta(T);
          CHECK(!oracle::det(T - to_complex(d.delta)).is_zero());
          CHECK(ones(d.delta) == n - rank);
        }
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::size_t rank = 1; 2 * rank < n; ++rank) {
        const ComplexMatrix T = random_low_rank(rng, n, rank);
        const DeltaShift d = find_delta_any_rank(T);
        CHECK(!oracle::det(T - to_complex(d.delta)).is_zero());
        CHECK(ones(d.delta) == n - rank);
      }
  }

  TEST_CASE("5 x 5 family reproduces delta_34 = delta_45 = delta_52 = 1") {
    Rng rng(33);
    IntMatrix expected(5, 5);
    expected(2, 3) = 1;
    expected(3, 4) = 1;
    expected(4, 1) = 1;
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix T = staircase_family_5x5(rng);
      const DeltaShift d = find_delta_any_rank(T);
      CHECK(d.delta == expected);
      CHECK(!oracle::det(T - to_complex(d.delta)).is_zero());
    }
  }

  TEST_CASE("positivity is required by find_delta") {
    CHECK_THROWS_AS(find_delta(ComplexMatrix{{-kI, QComplex(0)}, {QComplex(0), kI}}), NotPositiveDefinite);
  }

  TEST_CASE("mirror partner and the delta-shifted B-field") {
    const IntMatrix delta{{0, 0}, {0, 1}};
    const ComplexifiedSymplecticTorus tau = mirror_partner(example_T(), delta);
    CHECK(tau.tau == example_T() - to_complex(delta));
    CHECK_THROWS_AS(mirror_partner(example_T(), IntMatrix(2, 2)), SingularMatrix);
    const Biholomorphism phi = biholomorphism(example_T(), delta);
    CHECK(-oracle::inverse(phi.Tprime).transpose() == tau.tau.transpose());

    Rng rng(34);
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix T = random_singular_pd(rng, 3, 2);
      const IntMatrix d = find_delta(T).delta;
      const RationalMatrix re = real_part(T), im = imag_part(T);
      CHECK(delta_shift_transform(gcs_from_complexified_symplectic(re, im), d).M ==
            gcs_from_complexified_symplectic(re - to_rational(d), im).M);
    }
  }

  TEST_CASE("biholomorphism identities on random shifts") {
    Rng rng(35);
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix T = random_singular_pd(rng, 2 + k % 3, 1 + k % 3);
      const Biholomorphism phi = biholomorphism(T, find_delta(T).delta);
      CHECK(phi.Tprime == oracle::inverse(to_complex(phi.delta) - T));
      CHECK(oracle::det(phi.real_matrix) == 1);
      CHECK(check_biholomorphism(phi).ok());
    }
  }
}
