#pragma once

// Seeded generators for the verification families. Only the raw 64-bit
// output of mt19937_64 is used, so draws are identical across standard
// libraries.

#include <cstddef>
#include <cstdint>
#include <random>

#include "torus_mirror/exact.hpp"

namespace torus_mirror {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi], by rejection.
  long uniform_int(long lo, long hi);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// p / q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational small_rational(long num_bound = 4, long den_bound = 3);
  Rational nonzero_rational(long num_bound = 4, long den_bound = 3);
  QComplex small_complex(long num_bound = 4, long den_bound = 3);

 private:
  std::mt19937_64 engine_;
};

RationalMatrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                      long num_bound = 4, long den_bound = 3);
ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                    long num_bound = 4, long den_bound = 3);
IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
/// Random invertible rational matrix.
RationalMatrix random_invertible(Rng& rng, std::size_t n);

/// Re T arbitrary, Im T = M^t M + I.
ComplexMatrix random_pd_period(Rng& rng, std::size_t n);
/// det T != 0, no positivity requirement.
ComplexMatrix random_nonsingular(Rng& rng, std::size_t n);

/// S^t (B_1 + ... + B_k + i c_1 + ...) S with rank-one 2 x 2 blocks B_i whose
/// imaginary parts are positive definite. Im T is positive definite and
/// rank T == rank. Requires ceil(n/2) <= rank <= n.
ComplexMatrix random_singular_pd(Rng& rng, std::size_t n, std::size_t rank);
/// Product of random n x rank and rank x n complex matrices; rank exactly
/// `rank` (redrawn until so). Im T is not controlled.
ComplexMatrix random_low_rank(Rng& rng, std::size_t n, std::size_t rank);

/// The 5 x 5 rank-two family: rows 3, 4 are multiples of row 1, row 5 of
/// row 2, columns 1 and 2 are proportional in the first two rows, and the
/// (rows 1-2, columns 1, 3) minor is nonzero.
ComplexMatrix staircase_family_5x5(Rng& rng);

/// Integer A with A T' symmetric, drawn from an integral basis of the
/// solution lattice; may be zero when the lattice is trivial.
IntMatrix random_admissible(Rng& rng, const ComplexMatrix& Tprime, long coeff_bound = 2);

}  // namespace torus_mirror
