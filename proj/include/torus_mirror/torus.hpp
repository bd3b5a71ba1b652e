#pragma once

// Complex tori C^n / 2pi(Z^n + T Z^n), the integer shift delta making T - delta
// nonsingular, the shifted mirror partner and the biholomorphism
// phi(z) = (-T + delta)^{-1} z.

#include <cstddef>
#include <vector>

#include "torus_mirror/exact.hpp"
#include "torus_mirror/gcs.hpp"

namespace torus_mirror {

struct DeltaShift {
  IntMatrix delta;
  std::size_t rank = 0;                  // rank of T over C
  std::vector<std::size_t> basis_rows;   // first independent rows
  std::vector<std::size_t> minor_cols;   // nonsingular minor inside basis_rows
  QComplex det_shifted;                  // det(T - delta), nonzero
};

/// Throws NotPositiveDefinite unless Im T is positive definite, then runs
/// find_delta_any_rank.
DeltaShift find_delta(const ComplexMatrix& T);

/// The constructive shift without the positivity precondition. Dependent rows
/// (ascending) receive unit entries at the columns outside the minor, visited
/// cyclically starting after the last minor column.
DeltaShift find_delta_any_rank(const ComplexMatrix& T);

/// The {0,1} matrix placing the unit entries for the given row basis and minor
/// columns (0-based).
IntMatrix delta_from_pivots(std::size_t n, const std::vector<std::size_t>& basis_rows,
                            const std::vector<std::size_t>& minor_cols);

struct ComplexifiedSymplecticTorus {
  ComplexMatrix tau;  // B + i omega
};

/// tau = T - delta. Throws SingularMatrix when det(T - delta) == 0.
ComplexifiedSymplecticTorus mirror_partner(const ComplexMatrix& T, const IntMatrix& delta);

/// B-field transform by D = [[0, delta], [-delta^t, 0]].
GCStructure delta_shift_transform(const GCStructure& s, const IntMatrix& delta);

struct Biholomorphism {
  ComplexMatrix T;
  IntMatrix delta;
  ComplexMatrix Tprime;    // (-T + delta)^{-1}
  IntMatrix real_matrix;   // [[0, -I], [I, delta]]
};

/// Throws SingularMatrix when -T + delta is singular.
Biholomorphism biholomorphism(const ComplexMatrix& T, const IntMatrix& delta);

struct BiholomorphismCheck {
  bool inverse_exact = false;     // T' (-T + delta) == I
  bool real_det_one = false;      // det [[0,-I],[I,delta]] == 1
  bool lattice_generators = false;  // T' T e_k == -e_k + T' delta e_k
  bool mobius = false;            // (T C + A)^{-1}(T D + B) == T' for [[delta, I], [-I, 0]]
  bool ok() const { return inverse_exact && real_det_one && lattice_generators && mobius; }
};

BiholomorphismCheck check_biholomorphism(const Biholomorphism& phi);

}  // namespace torus_mirror
