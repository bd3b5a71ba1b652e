#pragma once

// Symplectic side: affine Lagrangian multi-sections with flat line bundles on
// the mirror tori, the Fukaya object conditions, the object-level mirror map
// and a canonical key for isomorphism classes.

#include <cstddef>
#include <string>
#include <vector>

#include "torus_mirror/bundle.hpp"
#include "torus_mirror/exact.hpp"
#include "torus_mirror/torus.hpp"

namespace torus_mirror {

/// base + 2 pi * turns with both parts rational; exact for the phase shifts
/// produced by roots of unity.
struct PhaseReal {
  Rational base;
  Rational turns;

  double to_double() const;
  friend PhaseReal operator+(const PhaseReal& a, const PhaseReal& b) {
    return {a.base + b.base, a.turns + b.turns};
  }
  friend PhaseReal operator-(const PhaseReal& a, const PhaseReal& b) {
    return {a.base - b.base, a.turns - b.turns};
  }
  friend PhaseReal operator*(const Rational& s, const PhaseReal& a) {
    return {s * a.base, s * a.turns};
  }
  friend bool operator==(const PhaseReal& a, const PhaseReal& b) {
    return a.base == b.base && a.turns == b.turns;
  }
};

using PhaseVector = std::vector<PhaseReal>;
PhaseVector to_phase_vector(const RationalVector& v);

enum class Side {
  CheckTprime,  // Y = (1/r) A X + (1/r) p on the mirror of T^{2n}_{J=T'}
  CheckT,       // x = -(1/r) A y + (1/r) p on the mirror of T^{2n}_{J=T}
};

std::string side_name(Side s);
/// Accepts "check-Tprime" and "check-T"; throws InputError otherwise.
Side parse_side(const std::string& s);

struct AffineLagrangian {
  Side side = Side::CheckTprime;
  Integer r;
  IntMatrix A;
  PhaseVector p;
};

struct FukayaObject {
  AffineLagrangian lagrangian;
  PhaseVector q;  // holonomy of the flat line bundle
};

struct FukayaCheck {
  bool f1 = false;           // Lagrangian condition
  bool f2 = false;           // curvature equals the restricted B-field
  bool holomorphic = false;  // A T' == (A T')^t
  bool ok() const { return f1 && f2; }
  bool consistent() const { return ok() == holomorphic; }
};

/// Evaluates (f1) and (f2) on the requested side using the data of phi.
FukayaCheck check_fukaya_object(const Integer& r, const IntMatrix& A, Side side,
                                const Biholomorphism& phi);
FukayaCheck check_fukaya_object(const FukayaObject& obj, const Biholomorphism& phi);

struct MirrorImage {
  FukayaObject object;
  DetPhases phases;        // xi, theta as turns in [0, 1)
  PhaseVector p_theta;     // p - (r/r') theta
  PhaseVector q_xi;        // q + (r/r') xi
};

/// E_(r,A,mu,U) -> (L_(r,A,p(theta)), L_(r,A,p(theta),q(xi))). Uses the
/// determinant phases of V, U (or V', U' via the caller). Throws NotHolomorphic.
MirrorImage mirror_object(const BundleSpec& spec, Side side, const std::vector<MonomialMatrix>& V,
                          const std::vector<MonomialMatrix>& U);
MirrorImage mirror_object(const BundleSpec& spec, Side side);

struct CanonicalKey {
  Side side = Side::CheckTprime;
  RationalMatrix slope;           // A / r
  RationalVector p_base;          // non-2pi part of p / r
  RationalVector p_turns;         // 2pi part of p / r mod Z^n + (A/r) Z^n
  RationalVector q_base;          // non-2pi part of q / r
  RationalVector q_turns;         // 2pi part of q / r mod 1
  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
    return a.side == b.side && a.slope == b.slope && a.p_base == b.p_base &&
           a.p_turns == b.p_turns && a.q_base == b.q_base && a.q_turns == b.q_turns;
  }
  friend bool operator!=(const CanonicalKey& a, const CanonicalKey& b) { return !(a == b); }
  std::string to_string() const;
};

/// The translation lattice of the multi-section is generated by the columns of
/// [rI | A] (in units of 2 pi / r); the turn part of p is reduced against its
/// lower Hermite basis, coordinate by coordinate.
CanonicalKey canonical_form(const FukayaObject& obj);

}  // namespace torus_mirror
