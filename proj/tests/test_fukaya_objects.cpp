#include <doctest.h>

#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/fukaya.hpp"
#include "torus_mirror/roots_of_unity.hpp"
#include "torus_mirror/torus.hpp"
#include "torus_mirror/verify.hpp"

using namespace torus_mirror;

namespace {

const QComplex kI = QComplex::i();

Biholomorphism example_phi() {
  return biholomorphism(ComplexMatrix{{kI, QComplex(1)}, {QComplex(-1), kI}}, IntMatrix{{0, 0}, {0, 1}});
}

const IntMatrix kA1{{0, 1}, {1, 1}};
const IntMatrix kA2{{1, 1}, {1, -1}};

}  // namespace

TEST_SUITE("fukaya_objects") {
  TEST_CASE("clock and shift matrices") {
    const MonomialMatrix s = MonomialMatrix::shift(3);
    const MonomialMatrix c = MonomialMatrix::clock(3, Rational(1, 3));
    CHECK(s.pow(3L) == MonomialMatrix::identity(3));
    CHECK(c.pow(3L) == MonomialMatrix::identity(3));
    Rational turn;
    REQUIRE(commutator_turn(c, s, turn));
    CHECK((turn == Rational(1, 3) || turn == Rational(2, 3)));
    CHECK(reduce_turn(Rational(-1, 4)) == Rational(3, 4));
    CHECK(kron(s, c).size() == 9);
  }

  TEST_CASE("side names round trip") {
    CHECK(parse_side(side_name(Side::CheckT)) == Side::CheckT);
    CHECK(parse_side("check-Tprime") == Side::CheckTprime);
    CHECK_THROWS_AS(parse_side("left"), InputError);
  }

  TEST_CASE("(f1) and (f2) hold exactly when A T' is symmetric") {
    const Biholomorphism phi = example_phi();
    for (Side side : {Side::CheckTprime, Side::CheckT}) {
      CHECK(check_fukaya_object(1, kA1, side, phi).ok());
      CHECK_FALSE(check_fukaya_object(1, kA2, side, phi).ok());
      for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
          CHECK(check_fukaya_object(2, IntMatrix{{a, b}, {b, a + b}}, side, phi).consistent());
    }
  }

  TEST_CASE("mirror objects of holomorphic bundles pass and non-holomorphic ones are rejected") {
    const Biholomorphism phi = example_phi();
    const BundleSpec spec = make_bundle_spec(2, kA1, phi.Tprime, RationalVector{Rational(1, 2), 0},
                                             RationalVector{0, Rational(1, 3)});
    for (Side side : {Side::CheckTprime, Side::CheckT}) {
      const MirrorImage img = mirror_object(spec, side);
      CHECK(check_fukaya_object(img.object, phi).ok());
      CHECK(img.object.lagrangian.r == 2);
    }
    CHECK_THROWS_AS(mirror_object(make_bundle_spec(1, kA2, phi.Tprime, RationalVector(2), RationalVector(2)),
                                  Side::CheckTprime),
                    NotHolomorphic);
  }

  TEST_CASE("canonical keys ignore lattice translations of p and q") {
    FukayaObject obj;
    obj.lagrangian = {Side::CheckTprime, 2, kA1, {{Rational(1, 3), Rational(1, 5)}, {0, Rational(1, 7)}}};
    obj.q = {{0, Rational(1, 4)}, {Rational(2), 0}};
    const CanonicalKey key = canonical_form(obj);
    FukayaObject moved = obj;
    moved.lagrangian.p[0].turns += 2;
    moved.q[1].turns -= 2;
    CHECK(canonical_form(moved) == key);
    FukayaObject by_a = obj;
    by_a.lagrangian.p[0].turns -= Rational(kA1(0, 1));
    by_a.lagrangian.p[1].turns -= Rational(kA1(1, 1));
    CHECK(canonical_form(by_a) == key);
    FukayaObject other = obj;
    other.q[0].turns += Rational(1, 2);
    CHECK(canonical_form(other) != key);
  }

  TEST_CASE("injectivity over the bound-1 enumeration of the worked example") {
    const TorusInput t = section5_torus();
    const InjectivityResult inj = injectivity_check(t.T, *t.delta, 1);
    CHECK(inj.objects > 0);
    CHECK(inj.collisions == 0);
    CHECK(inj.fukaya_failures == 0);
    CHECK(inj.cocycle_failures == 0);
  }
}
