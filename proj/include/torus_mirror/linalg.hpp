#pragma once

// Exact linear algebra over Z, Q and Q(i).

#include <cstddef>
#include <vector>

#include "torus_mirror/exact.hpp"

namespace torus_mirror {

/// left * A * right == diag(divisors), with left/right unimodular, the
/// nonzero divisors first and each dividing the next.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> divisors;

  std::size_t nonzero_count() const;
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Pivot: smallest nonzero absolute value in the active block, ties broken
/// in row-major order. Deterministic for a fixed input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant.
Integer exact_det(const IntMatrix& m);
Rational exact_det(const RationalMatrix& m);
QComplex exact_det(const ComplexMatrix& m);

std::size_t exact_rank(const RationalMatrix& m);
std::size_t exact_rank(const ComplexMatrix& m);

/// Throws SingularMatrix when the determinant vanishes.
RationalMatrix exact_inverse(const RationalMatrix& m);
ComplexMatrix exact_inverse(const ComplexMatrix& m);
/// Inverse of a matrix with determinant +-1; throws SingularMatrix otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Greedy scan in index order: the lexicographically first row basis.
std::vector<std::size_t> independent_rows(const ComplexMatrix& m);
std::vector<std::size_t> independent_columns(const ComplexMatrix& m);

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Lower-triangular basis with positive diagonal of the lattice spanned by the
/// columns of `generators` (rows x k). Requires the columns to span Q^rows.
IntMatrix lower_hermite_basis(const IntMatrix& generators);

/// Positive definiteness in the quadratic-form sense: every leading principal
/// minor of (M + M^t)/2 is positive.
bool is_positive_definite(const RationalMatrix& m);

}  // namespace torus_mirror
