#include <doctest.h>

#include "oracles.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/gcs.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"

using namespace torus_mirror;

namespace {

ComplexMatrix pd_nonsingular(Rng& rng, std::size_t n) {
  for (;;) {
    ComplexMatrix t = random_pd_period(rng, n);
    if (!oracle::det(t).is_zero()) return t;
  }
}

bool axioms_hold(const GCStructure& s) {
  const std::size_t m = s.M.rows();
  RationalMatrix q(m, m);
  for (std::size_t i = 0; i < m / 2; ++i) {
    q(i, m / 2 + i) = 1;
    q(m / 2 + i, i) = 1;
  }
  return s.M * s.M == -RationalMatrix::identity(m) && s.M.transpose() * q * s.M == q;
}

}  // namespace

TEST_SUITE("gcs_core") {
  TEST_CASE("complex and symplectic structures satisfy the axioms") {
    Rng rng(21);
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = 1 + k % 4;
      const ComplexMatrix T = pd_nonsingular(rng, n);
      const GCStructure ij = gcs_from_complex_structure(T);
      CHECK(axioms_hold(ij));
      CHECK(check_axioms(ij).ok());
      const ComplexMatrix tau = -oracle::inverse(T).transpose();
      const GCStructure iw = gcs_from_complexified_symplectic(real_part(tau), imag_part(tau));
      CHECK(axioms_hold(iw));
      CHECK(gcs_from_complexified_symplectic_product(real_part(tau), imag_part(tau)).M == iw.M);
    }
  }

  TEST_CASE("the g24 mirror of I_J is I_omega(B) for B + i omega = -(T^-1)^t") {
    Rng rng(22);
    std::size_t g13_matches = 0;
    for (int k = 0; k < 30; ++k) {
      const ComplexMatrix T = pd_nonsingular(rng, 1 + k % 3);
      const ComplexMatrix tau = -oracle::inverse(T).transpose();
      const GCStructure ij = gcs_from_complex_structure(T);
      const GCStructure iw = gcs_from_complexified_symplectic(real_part(tau), imag_part(tau));
      CHECK(mirror_g24(ij).M == iw.M);
      g13_matches += mirror_g13(ij).M == iw.M;
    }
    CHECK(g13_matches < 30);
  }

  TEST_CASE("B-field transforms preserve the axioms and reject non-alternating forms") {
    Rng rng(23);
    const ComplexMatrix T = pd_nonsingular(rng, 2);
    const RationalMatrix m = random_rational_matrix(rng, 4, 4);
    CHECK(check_axioms(b_field_transform(gcs_from_complex_structure(T), {m - m.transpose()})).ok());
    CHECK_THROWS_AS(b_field_transform(gcs_from_complex_structure(T), {m * m.transpose() + RationalMatrix::identity(4)}),
                    NotAlternating);
  }

  TEST_CASE("non-positive Im T and singular omega are rejected") {
    const QComplex i = QComplex::i();
    CHECK_THROWS_AS(gcs_from_complex_structure(ComplexMatrix{{-i}}), NotPositiveDefinite);
    CHECK_THROWS_AS(gcs_from_complexified_symplectic(RationalMatrix{{0}}, RationalMatrix{{0}}), SingularOmega);
  }

  TEST_CASE("mirror relations hold exactly and the matching solution is unique") {
    Rng rng(24);
    for (int k = 0; k < 30; ++k) {
      const ComplexMatrix T = pd_nonsingular(rng, 1 + k % 3);
      const MirrorRelationReport rep = check_mirror_relations(T);
      CHECK(rep.all_zero());
      CHECK(rep.tau == -oracle::inverse(T).transpose());
      CHECK(solve_mirror_matching(T) == rep.tau);
    }
  }

  TEST_CASE("the singular period matrix [[i,1],[-1,i]] has no Definition-1 mirror") {
    const QComplex i = QComplex::i();
    const ComplexMatrix T{{i, QComplex(1)}, {QComplex(-1), i}};
    CHECK(oracle::det(T).is_zero());
    CHECK_THROWS_AS(check_mirror_relations(T), SingularPeriodMatrix);
  }
}
