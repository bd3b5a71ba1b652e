#include "torus_mirror/sampling.hpp"

#include <stdexcept>

#include "torus_mirror/linalg.hpp"

namespace torus_mirror {
namespace {

IntMatrix integral_multiple(const RationalVector& v, std::size_t n) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix out(n, n);
  for (std::size_t c = 0; c < v.size(); ++c) {
    const Rational scaled = v[c] * Rational(l);
    out(c / n, c % n) = scaled.get_num();
  }
  return out;
}

}  // namespace

long Rng::uniform_int(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational Rng::small_rational(long num_bound, long den_bound) {
  const long p = uniform_int(-num_bound, num_bound);
  const long q = uniform_int(1, den_bound);
  Rational out(p, q);
  out.canonicalize();
  return out;
}

Rational Rng::nonzero_rational(long num_bound, long den_bound) {
  Rational out;
  do {
    out = small_rational(num_bound, den_bound);
  } while (out == 0);
  return out;
}

QComplex Rng::small_complex(long num_bound, long den_bound) {
  Rational re = small_rational(num_bound, den_bound);
  Rational im = small_rational(num_bound, den_bound);
  return {re, im};
}

RationalMatrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols, long num_bound,
                                      long den_bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.small_rational(num_bound, den_bound);
  return m;
}

ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols, long num_bound,
                                    long den_bound) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.small_complex(num_bound, den_bound);
  return m;
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m = random_rational_matrix(rng, n, n, 3, 2);
    if (exact_det(m) != 0) return m;
  }
}

ComplexMatrix random_pd_period(Rng& rng, std::size_t n) {
  const RationalMatrix re = random_rational_matrix(rng, n, n);
  const RationalMatrix m = random_rational_matrix(rng, n, n, 2, 2);
  return from_parts(re, m.transpose() * m + RationalMatrix::identity(n));
}

ComplexMatrix random_nonsingular(Rng& rng, std::size_t n) {
  for (;;) {
    ComplexMatrix t = random_complex_matrix(rng, n, n);
    if (!exact_det(t).is_zero()) return t;
  }
}

ComplexMatrix random_singular_pd(Rng& rng, std::size_t n, std::size_t rank) {
  if (rank > n || 2 * rank < n) throw std::invalid_argument("random_singular_pd: need n/2 <= rank <= n");
  const std::size_t pairs = n - rank;
  ComplexMatrix core(n, n);
  for (std::size_t b = 0; b < pairs; ++b) {
    // u = a + i b, w = d + i c with Im(u w^t) = a c^t + b d^t = [a b][c d]^t = P.
    const RationalMatrix ab = random_invertible(rng, 2);
    const RationalMatrix L = random_rational_matrix(rng, 2, 2, 2, 2);
    const RationalMatrix P = L.transpose() * L + RationalMatrix::identity(2);
    const RationalMatrix cd = (exact_inverse(ab) * P).transpose();
    ComplexVector u(2), w(2);
    for (std::size_t i = 0; i < 2; ++i) {
      u[i] = QComplex(ab(i, 0), ab(i, 1));
      w[i] = QComplex(cd(i, 1), cd(i, 0));
    }
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) core(2 * b + i, 2 * b + j) = u[i] * w[j];
  }
  for (std::size_t k = 2 * pairs; k < n; ++k) {
    Rational c(rng.uniform_int(1, 4), rng.uniform_int(1, 3));
    c.canonicalize();
    core(k, k) = QComplex(Rational(0), c);
  }
  const ComplexMatrix S = to_complex(random_invertible(rng, n));
  return S.transpose() * core * S;
}

ComplexMatrix random_low_rank(Rng& rng, std::size_t n, std::size_t rank) {
  for (;;) {
    const ComplexMatrix t =
        random_complex_matrix(rng, n, rank) * random_complex_matrix(rng, rank, n);
    if (exact_rank(t) == rank) return t;
  }
}

ComplexMatrix staircase_family_5x5(Rng& rng) {
  for (;;) {
    ComplexMatrix t(5, 5);
    const QComplex lambda = rng.small_complex();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) t(i, j) = rng.small_complex();
    t(0, 1) = lambda * t(0, 0);
    t(1, 1) = lambda * t(1, 0);
    if ((t(0, 0) * t(1, 2) - t(0, 2) * t(1, 0)).is_zero()) continue;
    QComplex c[3];
    for (auto& ci : c) {
      do {
        ci = rng.small_complex();
      } while (ci.is_zero());
    }
    for (std::size_t j = 0; j < 5; ++j) {
      t(2, j) = c[0] * t(0, j);
      t(3, j) = c[1] * t(0, j);
      t(4, j) = c[2] * t(1, j);
    }
    return t;
  }
}

IntMatrix random_admissible(Rng& rng, const ComplexMatrix& Tprime, long coeff_bound) {
  const std::size_t n = Tprime.rows();
  // Unknown a_jl sits at column j * n + l; each j < k contributes Re and Im rows.
  RationalMatrix eqs(n * (n - 1), n * n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k, row += 2)
      for (std::size_t l = 0; l < n; ++l) {
        eqs(row, j * n + l) += Tprime(l, k).real();
        eqs(row + 1, j * n + l) += Tprime(l, k).imag();
        eqs(row, k * n + l) -= Tprime(l, j).real();
        eqs(row + 1, k * n + l) -= Tprime(l, j).imag();
      }
  const auto basis = nullspace(eqs);
  IntMatrix A(n, n);
  for (const auto& v : basis) {
    const long c = rng.uniform_int(-coeff_bound, coeff_bound);
    if (c == 0) continue;
    IntMatrix b = integral_multiple(v, n);
    b *= Integer(c);
    A += b;
  }
  return A;
}

}  // namespace torus_mirror
