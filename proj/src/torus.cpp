#include "torus_mirror/torus.hpp"

#include <algorithm>
#include <random>

#include "torus_mirror/errors.hpp"
#include "torus_mirror/linalg.hpp"

namespace torus_mirror {
namespace {

ComplexMatrix shifted(const ComplexMatrix& T, const IntMatrix& delta) {
  return T - to_complex(delta);
}

ComplexMatrix select(const ComplexMatrix& m, const std::vector<std::size_t>& rows) {
  ComplexMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

}  // namespace

IntMatrix delta_from_pivots(std::size_t n, const std::vector<std::size_t>& basis_rows,
                            const std::vector<std::size_t>& minor_cols) {
  if (basis_rows.size() != minor_cols.size())
    throw std::invalid_argument("row basis and minor columns differ in size");
  std::vector<bool> in_rows(n, false), in_cols(n, false);
  for (auto r : basis_rows) in_rows.at(r) = true;
  for (auto c : minor_cols) in_cols.at(c) = true;

  std::vector<std::size_t> dependent;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_rows[i]) dependent.push_back(i);

  // Staircase order: columns after the last minor column, then wrap to the start.
  const std::size_t start =
      minor_cols.empty() ? 0 : *std::max_element(minor_cols.begin(), minor_cols.end()) + 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t c = (start + k) % n;
    if (!in_cols[c]) free_cols.push_back(c);
  }

  IntMatrix delta(n, n);
  for (std::size_t k = 0; k < dependent.size(); ++k) delta(dependent[k], free_cols[k]) = 1;
  return delta;
}

DeltaShift find_delta_any_rank(const ComplexMatrix& T) {
  if (!T.is_square()) throw std::invalid_argument("period matrix must be square");
  const std::size_t n = T.rows();
  DeltaShift out;
  out.basis_rows = independent_rows(T);
  out.rank = out.basis_rows.size();
  out.minor_cols = independent_columns(select(T, out.basis_rows));
  out.delta = delta_from_pivots(n, out.basis_rows, out.minor_cols);
  out.det_shifted = exact_det(shifted(T, out.delta));
  if (!out.det_shifted.is_zero()) return out;

  // Unreachable by the multilinearity argument; kept as a guard.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = entry(rng);
    const QComplex det = exact_det(shifted(T, d));
    if (!det.is_zero()) {
      out.delta = d;
      out.det_shifted = det;
      return out;
    }
  }
  throw ConstructionFailed("no integer shift with det(T - delta) != 0 was found");
}

DeltaShift find_delta(const ComplexMatrix& T) {
  if (!T.is_square()) throw std::invalid_argument("period matrix must be square");
  if (!is_positive_definite(imag_part(T)))
    throw NotPositiveDefinite("Im T is not positive definite");
  return find_delta_any_rank(T);
}

ComplexifiedSymplecticTorus mirror_partner(const ComplexMatrix& T, const IntMatrix& delta) {
  if (!T.is_square() || delta.rows() != T.rows() || delta.cols() != T.cols())
    throw std::invalid_argument("T and delta must be square of equal size");
  ComplexMatrix tau = shifted(T, delta);
  if (exact_det(tau).is_zero()) throw SingularMatrix("T - delta is singular");
  return {std::move(tau)};
}

GCStructure delta_shift_transform(const GCStructure& s, const IntMatrix& delta) {
  const std::size_t n = s.n;
  if (delta.rows() != n || delta.cols() != n) throw std::invalid_argument("delta must be n x n");
  const RationalMatrix d = to_rational(delta);
  RationalMatrix D(2 * n, 2 * n);
  D.set_block(0, n, d);
  D.set_block(n, 0, -d.transpose());
  return b_field_transform(s, {D});
}

Biholomorphism biholomorphism(const ComplexMatrix& T, const IntMatrix& delta) {
  if (!T.is_square() || delta.rows() != T.rows() || delta.cols() != T.cols())
    throw std::invalid_argument("T and delta must be square of equal size");
  const std::size_t n = T.rows();
  Biholomorphism phi;
  phi.T = T;
  phi.delta = delta;
  phi.Tprime = exact_inverse(to_complex(delta) - T);
  phi.real_matrix = IntMatrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    phi.real_matrix(i, n + i) = -1;
    phi.real_matrix(n + i, i) = 1;
  }
  phi.real_matrix.set_block(n, n, delta);
  return phi;
}

BiholomorphismCheck check_biholomorphism(const Biholomorphism& phi) {
  const std::size_t n = phi.T.rows();
  const auto id = ComplexMatrix::identity(n);
  const ComplexMatrix d = to_complex(phi.delta);
  BiholomorphismCheck c;
  c.inverse_exact = phi.Tprime * (d - phi.T) == id;
  c.real_det_one = exact_det(phi.real_matrix) == 1;
  // phi(2pi T e_k) / 2pi in the basis (e, T' e) of the target lattice.
  c.lattice_generators = phi.Tprime * phi.T == -id + phi.Tprime * d;
  // Moebius action of [[A, B], [C, D]] = [[delta, I], [-I, 0]].
  const ComplexMatrix mobius = exact_inverse(phi.T * (-id) + d) * (phi.T * ComplexMatrix(n, n) + id);
  c.mobius = mobius == phi.Tprime;
  return c;
}

}  // namespace torus_mirror
