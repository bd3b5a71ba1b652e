#pragma once

// Automorphy factors of the pulled-back bundle on C^n / 2pi(Z^n + T Z^n):
// the Hermitian form R, the imaginary parts of its lattice pairings, the gauge
// function Psi and a numeric check of the intertwining identities.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torus_mirror/bundle.hpp"
#include "torus_mirror/exact.hpp"
#include "torus_mirror/torus.hpp"

namespace torus_mirror {

using CVector = std::vector<std::complex<double>>;

struct CurvatureFactor {
  Integer r;
  Integer rprime;
  /// 4 pi R = (r'/r) ((Im T)^{-1})^t A^t, exact and real.
  RationalMatrix R_times_4pi;
  /// 2i (r'/r) {(T - conj T)^{-1}}^t A^t, the same matrix by the second route.
  ComplexMatrix R_times_4pi_alt;
  bool forms_agree = false;
  bool symmetric = false;
  /// R(z, w) = sum_ij R_ij z_i conj(w_j).
  std::complex<double> form(const CVector& z, const CVector& w) const;
};

/// Throws NotHolomorphic unless A T' is symmetric.
CurvatureFactor curvature_factor(const Integer& r, const IntMatrix& A, const Biholomorphism& phi);

/// Im R on the generators gamma_j = 2 pi e_j and gamma'_k = 2 pi T e_k, divided by pi.
struct PairingTable {
  RationalMatrix gg;     // Im R(gamma_j, gamma_k) / pi
  RationalMatrix gpgp;   // Im R(gamma'_j, gamma'_k) / pi
  RationalMatrix ggp;    // Im R(gamma_j, gamma'_k) / pi
  RationalMatrix gpg;    // Im R(gamma'_j, gamma_k) / pi
  RationalMatrix gg_expected;    // 0
  RationalMatrix gpgp_expected;  // (r'/r)(A^t delta - delta^t A)
  RationalMatrix ggp_expected;   // -(r'/r) A
  RationalMatrix gpg_expected;   // (r'/r) A^t
  bool aux_R_conjT = false;      // Im(4 pi R conj T) == -(r'/r) A
  bool aux_R_T = false;          // Im(4 pi R T) == (r'/r) A
  std::vector<std::string> mismatches;  // "table(j,k)" entries that differ
  bool ok() const { return mismatches.empty() && aux_R_conjT && aux_R_T; }
};

PairingTable im_pairings(const CurvatureFactor& R, const Biholomorphism& phi, const IntMatrix& A);
/// Throws PairingMismatch naming the first offending entry.
void require_pairings(const PairingTable& t);

/// exp(i (pi * pi_coeff + rest)) with both coefficients in Q(i).
struct ExactPhase {
  QComplex pi_coeff;
  QComplex rest;
  bool unitary() const { return pi_coeff.is_real() && rest.is_real(); }
  std::complex<double> value() const;
};

struct GaugeTransform {
  Integer r;
  Integer rprime;
  ComplexMatrix D;      // (T - conj T)^{-1}
  ComplexMatrix CalA;   // (r'/r) D^t A^t (delta - T) D
  ComplexMatrix W;      // D^t (delta - T)^t
  ComplexMatrix Wbar;   // D^t (delta - conj T)^t
  ComplexVector mu;
  bool calA_symmetric = false;
  bool calA_relation = false;  // conj(CalA) - CalA == -(i/2) * 4 pi R
  /// log Psi(z).
  std::complex<double> log_psi(const CVector& z) const;
};

GaugeTransform gauge_transform(const BundleSpec& spec, const Biholomorphism& phi,
                               const CurvatureFactor& R);

/// j(gamma, z) = exp(R(z, gamma)/r' + R(gamma, gamma)/(2 r')) * U(gamma), with
/// U(gamma) = phase * (V' or U').
struct AutomorphyFactor {
  PullbackUnitaries base;
  std::vector<ExactPhase> gamma_phase;    // for 2 pi e_j
  std::vector<ExactPhase> gammap_phase;   // for 2 pi T e_k
};

AutomorphyFactor automorphy_factor(const BundleSpec& spec, const Biholomorphism& phi,
                                   const GaugeTransform& g);

struct IntertwiningOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double unitary_tol = 1e-12;
};

struct IntertwiningReport {
  std::size_t samples = 0;
  double max_residual = 0;          // relative Frobenius, over samples and generators
  std::size_t worst_sample = 0;
  std::string worst_generator;
  double max_unitarity_defect = 0;  // max |U(gamma) U(gamma)^* - I|
  bool phases_exact_unitary = false;
  bool cocycle_exact = false;       // pullback relations and commutators vs Im R
  double max_cocycle_residual = 0;  // j(g, z+l) j(l, z) vs j(l, z+g) j(g, z)
  double tol = 0;
  double unitary_tol = 0;
  bool ok() const {
    return max_residual <= tol && max_unitarity_defect <= unitary_tol && phases_exact_unitary &&
           cocycle_exact && max_cocycle_residual <= tol;
  }
};

/// Samples z = x + T y with (x, y) uniform on [0, 2 pi)^{2n} and compares
/// Psi(z + gamma) e_gamma(z) Psi(z)^{-1} with j(gamma, z) for every generator.
IntertwiningReport verify_intertwining(const BundleSpec& spec, const Biholomorphism& phi,
                                       const IntertwiningOptions& opts = {});
/// Throws ToleranceExceeded with the worst sample when the report fails.
void require_intertwining(const IntertwiningReport& rep);

struct SetEntry {
  IntMatrix A;
  bool in_delta = false;  // A T' symmetric
  bool in_syz = false;    // A T symmetric
};

struct SetClassification {
  int bound = 0;
  std::vector<SetEntry> entries;
  std::size_t delta_count = 0;
  std::size_t syz_count = 0;
  std::size_t both_count = 0;
  std::vector<IntMatrix> delta_only;
  std::vector<IntMatrix> syz_only;
};

/// All integer A with entries in [-bound, bound], row-major lexicographic.
/// Throws BoundTooLarge past two million matrices.
SetClassification classify_sets(const ComplexMatrix& T, const IntMatrix& delta, int bound);

}  // namespace torus_mirror
