#include "torus_mirror/linalg.hpp"

#include <algorithm>
#include <utility>

#include "torus_mirror/errors.hpp"

namespace torus_mirror {
namespace {

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

template <class T>
T bareiss_det(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      swap_rows(m, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

// Row echelon form in place over a field; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_echelon(Matrix<T>& m, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && detail::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = reduced ? 0 : row + 1; i < m.rows(); ++i) {
      if (i == row || detail::is_zero(m(i, col))) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
Matrix<T> field_inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n));
  const auto pivots = row_echelon(aug, true);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw SingularMatrix("matrix is singular (exact determinant is zero)");
  return aug.block(0, n, n, n);
}

template <class T>
std::vector<std::size_t> greedy_independent_rows(const Matrix<T>& m) {
  // Incremental elimination: `basis` holds reduced rows keyed by pivot column.
  std::vector<std::pair<std::size_t, std::vector<T>>> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<T> v = m.row(i);
    for (const auto& [pc, b] : basis) {
      if (detail::is_zero(v[pc])) continue;
      const T f = v[pc];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
    }
    std::size_t pc = 0;
    while (pc < v.size() && detail::is_zero(v[pc])) ++pc;
    if (pc == v.size()) continue;
    const T inv = T(1) / v[pc];
    for (auto& x : v) x *= inv;
    for (auto& [opc, b] : basis) {
      if (detail::is_zero(b[pc])) continue;
      const T f = b[pc];
      for (std::size_t j = 0; j < b.size(); ++j) b[j] -= f * v[j];
    }
    basis.emplace_back(pc, std::move(v));
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace

std::size_t SmithDecomposition::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(divisors.begin(), divisors.end(), [](const Integer& d) { return d != 0; }));
}

IntMatrix SmithDecomposition::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t k = 0; k < divisors.size(); ++k) d(k, k) = divisors[k];
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero |entry| in the active block, first in row-major order.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer mag = abs(d(i, j));
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(left, t, pi);
      swap_cols(d, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            add_row(d, t, i, Integer(1));
            add_row(left, t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      add_row(d, t, t, Integer(-2));
      add_row(left, t, t, Integer(-2));
    }
  }

  SmithDecomposition out{std::move(left), std::move(right), {}};
  out.divisors.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) out.divisors.push_back(d(k, k));
  return out;
}

Integer exact_det(const IntMatrix& m) { return bareiss_det(m); }
Rational exact_det(const RationalMatrix& m) { return bareiss_det(m); }
QComplex exact_det(const ComplexMatrix& m) { return bareiss_det(m); }

std::size_t exact_rank(const RationalMatrix& m) {
  RationalMatrix w = m;
  return row_echelon(w, false).size();
}

std::size_t exact_rank(const ComplexMatrix& m) {
  ComplexMatrix w = m;
  return row_echelon(w, false).size();
}

RationalMatrix exact_inverse(const RationalMatrix& m) { return field_inverse(m); }
ComplexMatrix exact_inverse(const ComplexMatrix& m) { return field_inverse(m); }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer det = exact_det(m);
  if (abs(det) != 1) throw SingularMatrix("matrix is not unimodular");
  return to_integer(exact_inverse(to_rational(m)));
}

std::vector<std::size_t> independent_rows(const ComplexMatrix& m) {
  return greedy_independent_rows(m);
}

std::vector<std::size_t> independent_columns(const ComplexMatrix& m) {
  return greedy_independent_rows(m.transpose());
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = row_echelon(r, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix lower_hermite_basis(const IntMatrix& generators) {
  IntMatrix g = generators;
  const std::size_t n = g.rows();
  const std::size_t k = g.cols();
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      std::size_t p = k;
      for (std::size_t c = i; c < k; ++c)
        if (g(i, c) != 0 && (p == k || abs(g(i, c)) < abs(g(i, p)))) p = c;
      if (p == k) throw SingularMatrix("lattice generators do not span full rank");
      swap_cols(g, i, p);
      bool done = true;
      for (std::size_t c = i + 1; c < k; ++c) {
        if (g(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), g(i, c).get_mpz_t(), g(i, i).get_mpz_t());
        add_col(g, c, i, -q);
        if (g(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (g(i, i) < 0) add_col(g, i, i, Integer(-2));
  }
  return g.block(0, 0, n, n);
}

bool is_positive_definite(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  RationalMatrix sym = m + m.transpose();
  sym *= Rational(1, 2);
  for (std::size_t k = 1; k <= n; ++k)
    if (sgn(exact_det(sym.block(0, 0, k, k))) <= 0) return false;
  return true;
}

}  // namespace torus_mirror
