#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "torus_mirror/automorphy.hpp"
#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"
#include "torus_mirror/torus.hpp"

using namespace torus_mirror;

namespace {

const QComplex kI = QComplex::i();
const IntMatrix kA1{{0, 1}, {1, 1}};
const IntMatrix kA2{{1, 1}, {1, -1}};

ComplexMatrix example_T() { return ComplexMatrix{{kI, QComplex(1)}, {QComplex(-1), kI}}; }
const IntMatrix kDelta{{0, 0}, {0, 1}};

// Im of a complex matrix product, taken entrywise.
RationalMatrix im(const ComplexMatrix& m) { return imag_part(m); }

}  // namespace

TEST_SUITE("automorphy") {
  TEST_CASE("worked example: 4 pi R = A1^t and the three pairing tables") {
    const Biholomorphism phi = biholomorphism(example_T(), kDelta);
    const CurvatureFactor cf = curvature_factor(1, kA1, phi);
    CHECK(cf.R_times_4pi == to_rational(kA1).transpose());
    CHECK(cf.forms_agree);
    const PairingTable pt = im_pairings(cf, phi, kA1);
    CHECK(pt.ok());
    CHECK(pt.ggp(0, 1) == -1);
    CHECK_THROWS_AS(curvature_factor(1, kA2, phi), NotHolomorphic);
  }

  TEST_CASE("pairings agree with a direct evaluation of Im R on lattice vectors") {
    Rng rng(51);
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = 2 + k % 2;
      const ComplexMatrix T = random_pd_period(rng, n);
      IntMatrix delta(n, n);
      if (oracle::det(T).is_zero()) delta(0, 0) = 1;
      const Biholomorphism phi = biholomorphism(T, delta);
      const IntMatrix A = random_admissible(rng, phi.Tprime);
      const Integer r = 1 + k % 3;
      const CurvatureFactor cf = curvature_factor(r, A, phi);
      // 4 pi R from the definition, with r' from the counting oracle.
      const Rational s = oracle::ratio(oracle::rank_by_counting(r.get_si(), A), r);
      RationalMatrix R = oracle::inverse(imag_part(T)).transpose() * to_rational(A).transpose();
      R *= s;
      CHECK(cf.R_times_4pi == R);
      const ComplexMatrix Rc = to_complex(R);
      const RationalMatrix Ar = to_rational(A), dr = to_rational(delta);
      RationalMatrix ggp_expected = -Ar, gpg_expected = Ar.transpose(),
                     gpgp_expected = Ar.transpose() * dr - dr.transpose() * Ar;
      ggp_expected *= s;
      gpg_expected *= s;
      gpgp_expected *= s;
      // Im R(2pi e_j, 2pi T e_k) / pi = Im(4 pi R conj(T))_jk, and so on.
      CHECK(im(Rc).is_zero());
      CHECK(im(Rc * conj(T)) == ggp_expected);
      CHECK(im(T.transpose() * Rc) == gpg_expected);
      CHECK(im(T.transpose() * Rc * conj(T)) == gpgp_expected);
      const PairingTable pt = im_pairings(cf, phi, A);
      CHECK(pt.ok());
      CHECK(pt.ggp == ggp_expected);
    }
  }

  TEST_CASE("gauge transform relations and numeric intertwining") {
    const Biholomorphism phi = biholomorphism(example_T(), kDelta);
    for (long r : {1L, 2L}) {
      const BundleSpec spec =
          make_bundle_spec(r, kA1, phi.Tprime, RationalVector{Rational(1, 3), Rational(-1, 2)},
                           RationalVector{Rational(1, 4), 0});
      const CurvatureFactor cf = curvature_factor(r, kA1, phi);
      const GaugeTransform g = gauge_transform(spec, phi, cf);
      CHECK(g.calA_symmetric);
      CHECK(g.calA_relation);
      IntertwiningOptions opts;
      opts.samples = 20;
      const IntertwiningReport rep = verify_intertwining(spec, phi, opts);
      CHECK(rep.ok());
      CHECK(rep.max_residual <= 1e-8);
      CHECK(rep.max_unitarity_defect <= 1e-12);
      CHECK(rep.cocycle_exact);
      CHECK(rep.phases_exact_unitary);
      CHECK(cf.rprime == r * r);
    }
  }

  TEST_CASE("r' = 2 on T = [[2i,2],[-2,2i]]") {
    const ComplexMatrix T{{QComplex(2) * kI, QComplex(2)}, {QComplex(-2), QComplex(2) * kI}};
    const IntMatrix A{{1, 2}, {2, 0}};
    const Biholomorphism phi = biholomorphism(T, kDelta);
    REQUIRE(is_holomorphic(A, phi.Tprime));
    const BundleSpec spec = make_bundle_spec(2, A, phi.Tprime, RationalVector(2), RationalVector(2));
    CHECK(spec.rank().rprime == 2);
    CHECK(verify_intertwining(spec, phi).ok());
  }

  TEST_CASE("the sets E_delta and E_SYZ differ on the worked example") {
    const SetClassification sc = classify_sets(example_T(), kDelta, 1);
    CHECK(sc.entries.size() == 81);
    bool a1 = false, a2 = false;
    for (const auto& e : sc.entries) {
      if (e.A == kA1) a1 = e.in_delta && !e.in_syz;
      if (e.A == kA2) a2 = e.in_syz && !e.in_delta;
      if (e.A.is_zero()) CHECK((e.in_delta && e.in_syz));
    }
    CHECK(a1);
    CHECK(a2);
    CHECK(classify_sets(example_T(), kDelta, 0).entries.size() == 1);
    CHECK_THROWS_AS(classify_sets(example_T(), kDelta, 20), BoundTooLarge);
  }
}
