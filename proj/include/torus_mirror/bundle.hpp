#pragma once

// Complex side: the bundles E_(r,A,mu,U) on T^{2n}_{J=T'} and their pullbacks
// along phi. Rank via elementary divisors, holomorphicity, unitary cocycle
// sets with exact root-of-unity entries, and connection/curvature data.

#include <cstddef>
#include <vector>

#include "torus_mirror/exact.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/roots_of_unity.hpp"
#include "torus_mirror/torus.hpp"

namespace torus_mirror {

struct RankData {
  Integer r;
  SmithDecomposition snf;          // snf.left * A * snf.right == diag
  std::vector<Integer> divisors;   // nonzero elementary divisors a~_1..a~_s
  std::vector<Integer> r_factors;  // r'_i with a~_i / r == a'_i / r'_i in lowest terms
  std::vector<Integer> a_factors;  // a'_i
  Integer rprime = 1;              // product of r'_i, 1 when A == 0
};

/// Throws std::invalid_argument unless r >= 1 and A is square.
RankData compute_rank(const Integer& r, const IntMatrix& A);

/// A T' == (A T')^t, exactly.
bool is_holomorphic(const IntMatrix& A, const ComplexMatrix& Tprime);

struct HolomorphicConditions {
  bool im_part = false;  // (Im T)^t A symmetric
  bool re_part = false;  // A^t Re(T - delta) symmetric
  bool both() const { return im_part && re_part; }
};

HolomorphicConditions holomorphic_conditions(const IntMatrix& A, const ComplexMatrix& T,
                                             const IntMatrix& delta);

/// {T'(T' - conj T')^{-1}}^t A^t (T' - conj T')^{-1}; only its antisymmetric
/// part survives in the (0,2) curvature. Throws SingularMatrix.
ComplexMatrix curvature_02_part(const IntMatrix& A, const ComplexMatrix& Tprime);

struct UnitarySet {
  Integer r;  // zeta = exp(2 pi i / r)
  RankData rank;
  std::vector<MonomialMatrix> V;
  std::vector<MonomialMatrix> U;
  Integer rprime() const { return rank.rprime; }
};

struct CocycleCheck {
  bool v_commute = false;  // V_j V_k == V_k V_j
  bool u_relation = false; // U_j U_k == zeta^{c_jk} U_k U_j
  bool mixed = false;      // zeta^{-m_kj} U_k V_j == V_j U_k
  bool ok() const { return v_commute && u_relation && mixed; }
};

/// Checks the three relations with U-commutator exponents c and mixed
/// exponents m, all exactly.
CocycleCheck check_cocycle(const std::vector<MonomialMatrix>& V, const std::vector<MonomialMatrix>& U,
                           const Integer& r, const IntMatrix& c, const IntMatrix& m);

/// V_j V_k = V_k V_j, U_j U_k = U_k U_j, zeta^{-a_kj} U_k V_j = V_j U_k.
CocycleCheck verify_unitary_set(const UnitarySet& set, const IntMatrix& A);

/// Clock and shift factors of sizes r'_i, carried back through the unimodular
/// SNF transforms. Throws ConstructionFailed when the relations do not verify.
UnitarySet build_unitary_set(const Integer& r, const IntMatrix& A);

/// V'_j = U_j and U'_k = U^{delta e_k} V_k^{-1}, the transition data of the
/// pullback bundle in the (x, y) coordinates.
struct PullbackUnitaries {
  std::vector<MonomialMatrix> V;
  std::vector<MonomialMatrix> U;
};

PullbackUnitaries pullback_unitaries(const UnitarySet& set, const IntMatrix& delta);

/// V'_j V'_k = V'_k V'_j, U'_j U'_k = zeta^{(A^t d)_jk - (A^t d)_kj} U'_k U'_j,
/// zeta^{-a_jk} U'_k V'_j = V'_j U'_k.
CocycleCheck verify_pullback_unitaries(const PullbackUnitaries& pb, const Integer& r,
                                       const IntMatrix& A, const IntMatrix& delta);

/// Turns of det V_j and det U_k, in [0, 1).
struct DetPhases {
  std::vector<Rational> xi_turns;
  std::vector<Rational> theta_turns;
};

DetPhases det_phases(const std::vector<MonomialMatrix>& V, const std::vector<MonomialMatrix>& U);

struct BundleSpec {
  Integer r;
  IntMatrix A;
  ComplexMatrix Tprime;
  RationalVector p;
  RationalVector q;
  UnitarySet unitaries;

  std::size_t n() const { return A.rows(); }
  /// mu = p + T'^t q.
  ComplexVector mu() const;
  const RankData& rank() const { return unitaries.rank; }
};

BundleSpec make_bundle_spec(const Integer& r, const IntMatrix& A, const ComplexMatrix& Tprime,
                            const RationalVector& p, const RationalVector& q);

/// Recovers real (p, q) with mu = p + T'^t q. Throws SingularMatrix when
/// Im T' is singular.
std::pair<RationalVector, RationalVector> split_mu(const ComplexVector& mu,
                                                   const ComplexMatrix& Tprime);

/// Connection and curvature coefficients, each multiplied by 2 pi.
struct ConnectionData {
  // On T'^{2n}: A = -(i/2 pi)(X^t L_X + c) dY.
  ComplexMatrix XY_linear_times_2pi;     // n x n, -(i/r) A^t
  ComplexVector XY_constant_times_2pi;   // -(i/r) mu
  ComplexMatrix XY_curvature_times_2pi;  // dX^t K dY, K = -(i/r) A^t
  // Pulled back to (x, y): A = y^t L (dx; dy) + c (dx; dy).
  ComplexMatrix xy_linear_times_2pi;     // n x 2n, (i/r) A^t [I, delta]
  ComplexVector xy_constant_times_2pi;   // 2n, -(i/r) [I, delta]^t mu
  ComplexMatrix xy_curvature_times_2pi;  // 2n x 2n form matrix on (dx; dy), antisymmetrized
  // In (dz, dz-bar): dz^t K11 dz-bar plus the pure parts (antisymmetrized).
  ComplexMatrix z11_times_2pi;
  ComplexMatrix z20_times_2pi;
  ComplexMatrix z02_times_2pi;
  // (i/r) {(T - conj T)^{-1}}^t A^t, the projectively flat form.
  ComplexMatrix z11_expected_times_2pi;
  bool chain_rule_ok = false;  // J^t K_XY J == K_xy for J = [[0,-I],[I,delta]]
};

ConnectionData pullback_connection(const BundleSpec& spec, const Biholomorphism& phi);

}  // namespace torus_mirror
