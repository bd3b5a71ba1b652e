#pragma once

// Generalized complex structures on T^{2n} as 4n x 4n rational matrices in the
// basis (x, y, dx, dy), B-field transforms and the two T-duality mirrors.

#include <cstddef>
#include <string>
#include <vector>

#include "torus_mirror/exact.hpp"

namespace torus_mirror {

struct GCStructure {
  std::size_t n = 0;
  RationalMatrix M;
};

struct AxiomCheck {
  bool squares_to_minus_one = false;  // M^2 == -I
  bool preserves_pairing = false;     // M^t Q M == Q
  bool ok() const { return squares_to_minus_one && preserves_pairing; }
};

/// Q = [[0, I_2n], [I_2n, 0]], the matrix of <X+a, Y+b> = a(Y) + b(X).
RationalMatrix pairing_matrix(std::size_t n);
RationalMatrix g24_matrix(std::size_t n);
RationalMatrix g13_matrix(std::size_t n);

AxiomCheck check_axioms(const GCStructure& s);

/// Block matrix I_J of the complex structure with period matrix T.
/// Throws NotPositiveDefinite unless Im T is positive definite.
GCStructure gcs_from_complex_structure(const ComplexMatrix& T);

/// I_omega(B) of the complexified symplectic form B + i omega.
/// Throws SingularOmega when omega is singular.
GCStructure gcs_from_complexified_symplectic(const RationalMatrix& B, const RationalMatrix& omega);

/// Same structure assembled as [[I,0],[B~,I]] I_omega [[I,0],[-B~,I]].
GCStructure gcs_from_complexified_symplectic_product(const RationalMatrix& B,
                                                     const RationalMatrix& omega);

GCStructure mirror_g24(const GCStructure& s);
GCStructure mirror_g13(const GCStructure& s);

struct BFieldForm {
  RationalMatrix B;  // 2n x 2n, alternating
};

/// B~ = [[0, -B], [B^t, 0]] for an n x n matrix B.
BFieldForm b_field_from(const RationalMatrix& B);

/// Conjugation by [[I,0],[B,I]]. Throws NotAlternating.
GCStructure b_field_transform(const GCStructure& s, const BFieldForm& b);

struct RelationResidual {
  std::string name;
  std::string relation;
  ComplexMatrix residual;  // lhs - rhs
};

struct MirrorRelationReport {
  ComplexMatrix tau;  // B + i omega = -(T^{-1})^t
  std::vector<RelationResidual> relations;
  bool all_zero() const;
};

/// Evaluates eq1..eq7, (right) and (left) for B + i omega = -(T^{-1})^t.
/// Throws SingularPeriodMatrix or NotPositiveDefinite.
MirrorRelationReport check_mirror_relations(const ComplexMatrix& T);

/// Solves the g24 matching equations directly: omega from eq2, then B from eq4.
/// Returns tau = B + i omega.
ComplexMatrix solve_mirror_matching(const ComplexMatrix& T);

}  // namespace torus_mirror
