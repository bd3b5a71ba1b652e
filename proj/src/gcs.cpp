#include "torus_mirror/gcs.hpp"

#include <array>

#include "torus_mirror/errors.hpp"
#include "torus_mirror/linalg.hpp"

namespace torus_mirror {
namespace {

using Blocks = std::array<std::array<RationalMatrix, 4>, 4>;

RationalMatrix assemble(std::size_t n, const Blocks& b) {
  RationalMatrix m(4 * n, 4 * n);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!b[i][j].empty()) m.set_block(i * n, j * n, b[i][j]);
  return m;
}

RationalMatrix block2(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                      const RationalMatrix& d) {
  const std::size_t n = a.rows();
  RationalMatrix m(2 * n, 2 * n);
  m.set_block(0, 0, a);
  m.set_block(0, n, b);
  m.set_block(n, 0, c);
  m.set_block(n, n, d);
  return m;
}

RationalMatrix conjugate(const RationalMatrix& g, const RationalMatrix& m) {
  return exact_inverse(g) * m * g;
}

RationalMatrix invert_omega(const RationalMatrix& omega) {
  try {
    return exact_inverse(omega);
  } catch (const SingularMatrix&) {
    throw SingularOmega("omega is singular");
  }
}

std::size_t half_dim(const GCStructure& s) {
  if (s.M.rows() != 4 * s.n || s.M.cols() != 4 * s.n)
    throw std::invalid_argument("GCStructure: matrix is not 4n x 4n");
  return s.n;
}

}  // namespace

RationalMatrix pairing_matrix(std::size_t n) {
  RationalMatrix q(4 * n, 4 * n);
  const auto id = RationalMatrix::identity(2 * n);
  q.set_block(0, 2 * n, id);
  q.set_block(2 * n, 0, id);
  return q;
}

RationalMatrix g24_matrix(std::size_t n) {
  const auto id = RationalMatrix::identity(n);
  Blocks b;
  b[0][0] = id;
  b[1][3] = id;
  b[2][2] = id;
  b[3][1] = id;
  return assemble(n, b);
}

RationalMatrix g13_matrix(std::size_t n) {
  const auto id = RationalMatrix::identity(n);
  Blocks b;
  b[0][2] = id;
  b[1][1] = id;
  b[2][0] = id;
  b[3][3] = id;
  return assemble(n, b);
}

AxiomCheck check_axioms(const GCStructure& s) {
  const std::size_t n = half_dim(s);
  AxiomCheck c;
  c.squares_to_minus_one = (s.M * s.M) == -RationalMatrix::identity(4 * n);
  const auto q = pairing_matrix(n);
  c.preserves_pairing = (s.M.transpose() * q * s.M) == q;
  return c;
}

GCStructure gcs_from_complex_structure(const ComplexMatrix& T) {
  if (!T.is_square()) throw std::invalid_argument("period matrix must be square");
  const std::size_t n = T.rows();
  const RationalMatrix tr = real_part(T);
  const RationalMatrix ti = imag_part(T);
  if (!is_positive_definite(ti)) throw NotPositiveDefinite("Im T is not positive definite");
  const RationalMatrix tii = exact_inverse(ti);
  const RationalMatrix tiit = tii.transpose();
  const RationalMatrix trt = tr.transpose();
  Blocks b;
  b[0][0] = -(tr * tii);
  b[0][1] = -ti - tr * tii * tr;
  b[1][0] = tii;
  b[1][1] = tii * tr;
  b[2][2] = tiit * trt;
  b[2][3] = -tiit;
  b[3][2] = ti.transpose() + trt * tiit * trt;
  b[3][3] = -(trt * tiit);
  return {n, assemble(n, b)};
}

GCStructure gcs_from_complexified_symplectic(const RationalMatrix& B, const RationalMatrix& omega) {
  if (!omega.is_square() || B.rows() != omega.rows() || B.cols() != omega.cols())
    throw std::invalid_argument("B and omega must be square of equal size");
  const std::size_t n = omega.rows();
  const RationalMatrix wi = invert_omega(omega);
  const RationalMatrix wit = wi.transpose();
  const RationalMatrix bt = B.transpose();
  Blocks b;
  b[0][0] = wit * bt;
  b[0][3] = -wit;
  b[1][1] = wi * B;
  b[1][2] = wi;
  b[2][1] = -omega - B * wi * B;
  b[2][2] = -(B * wi);
  b[3][0] = omega.transpose() + bt * wit * bt;
  b[3][3] = -(bt * wit);
  return {n, assemble(n, b)};
}

GCStructure gcs_from_complexified_symplectic_product(const RationalMatrix& B,
                                                     const RationalMatrix& omega) {
  if (!omega.is_square() || B.rows() != omega.rows() || B.cols() != omega.cols())
    throw std::invalid_argument("B and omega must be square of equal size");
  const std::size_t n = omega.rows();
  const RationalMatrix zero(n, n);
  const RationalMatrix w_rep = block2(zero, -omega, omega.transpose(), zero);
  RationalMatrix w_rep_inv;
  try {
    w_rep_inv = exact_inverse(w_rep);
  } catch (const SingularMatrix&) {
    throw SingularOmega("omega is singular");
  }
  const RationalMatrix zero2(2 * n, 2 * n);
  const RationalMatrix i_omega = block2(zero2, -w_rep_inv, w_rep, zero2);
  return b_field_transform({n, i_omega}, b_field_from(B));
}

GCStructure mirror_g24(const GCStructure& s) {
  const std::size_t n = half_dim(s);
  return {n, conjugate(g24_matrix(n), s.M)};
}

GCStructure mirror_g13(const GCStructure& s) {
  const std::size_t n = half_dim(s);
  return {n, conjugate(g13_matrix(n), s.M)};
}

BFieldForm b_field_from(const RationalMatrix& B) {
  const std::size_t n = B.rows();
  const RationalMatrix zero(n, n);
  return {block2(zero, -B, B.transpose(), zero)};
}

GCStructure b_field_transform(const GCStructure& s, const BFieldForm& b) {
  const std::size_t n = half_dim(s);
  if (b.B.rows() != 2 * n || b.B.cols() != 2 * n)
    throw std::invalid_argument("B-field must be 2n x 2n");
  if (b.B.transpose() != -b.B) throw NotAlternating("B-field is not alternating");
  const auto id = RationalMatrix::identity(2 * n);
  const RationalMatrix zero(2 * n, 2 * n);
  const RationalMatrix left = block2(id, zero, b.B, id);
  const RationalMatrix right = block2(id, zero, -b.B, id);
  return {n, left * s.M * right};
}

bool MirrorRelationReport::all_zero() const {
  for (const auto& r : relations)
    if (!r.residual.is_zero()) return false;
  return true;
}

MirrorRelationReport check_mirror_relations(const ComplexMatrix& T) {
  if (!T.is_square()) throw std::invalid_argument("period matrix must be square");
  const std::size_t n = T.rows();
  const RationalMatrix tr = real_part(T);
  const RationalMatrix ti = imag_part(T);
  if (!is_positive_definite(ti)) throw NotPositiveDefinite("Im T is not positive definite");
  ComplexMatrix t_inv;
  try {
    t_inv = exact_inverse(T);
  } catch (const SingularMatrix&) {
    throw SingularPeriodMatrix("T is singular; -(T^{-1})^t is undefined");
  }
  MirrorRelationReport rep;
  rep.tau = -t_inv.transpose();
  const RationalMatrix B = real_part(rep.tau);
  const RationalMatrix w = imag_part(rep.tau);
  const RationalMatrix wi = invert_omega(w);
  const RationalMatrix wit = wi.transpose();
  const RationalMatrix tii = exact_inverse(ti);
  const RationalMatrix tiit = tii.transpose();
  const RationalMatrix trt = tr.transpose();
  const RationalMatrix bt = B.transpose();
  const auto id = RationalMatrix::identity(n);

  auto add = [&rep](std::string name, std::string relation, const RationalMatrix& lhs,
                    const RationalMatrix& rhs) {
    rep.relations.push_back({std::move(name), std::move(relation), to_complex(lhs - rhs)});
  };
  add("eq1", "-T_R T_I^{-1} == (w^{-1})^t B^t", -(tr * tii), wit * bt);
  add("eq2", "-T_I - T_R T_I^{-1} T_R == -(w^{-1})^t", -ti - tr * tii * tr, -wit);
  add("eq3", "T_I^{-1} == w^t + B^t (w^{-1})^t B^t", tii, w.transpose() + bt * wit * bt);
  add("eq4", "T_I^{-1} T_R == -B^t (w^{-1})^t", tii * tr, -(bt * wit));
  add("eq5", "-T_R^t w - T_I^t B == 0", -(trt * w) - ti.transpose() * B, RationalMatrix(n, n));
  add("eq6", "T_R^t B == -T_R^t (T_I^{-1})^t T_R^t w", trt * B, -(trt * tiit * trt * w));
  add("eq7", "T_I^t w - T_R^t B == I", ti.transpose() * w - trt * B, id);
  const auto cid = ComplexMatrix::identity(n);
  rep.relations.push_back(
      {"right", "-T^t (B + i w) == I", (-T.transpose()) * rep.tau - cid});
  rep.relations.push_back({"left", "(B + i w)(-T^t) == I", rep.tau * (-T.transpose()) - cid});
  return rep;
}

ComplexMatrix solve_mirror_matching(const ComplexMatrix& T) {
  if (!T.is_square()) throw std::invalid_argument("period matrix must be square");
  const RationalMatrix tr = real_part(T);
  const RationalMatrix ti = imag_part(T);
  RationalMatrix tii;
  try {
    tii = exact_inverse(ti);
  } catch (const SingularMatrix&) {
    throw SingularMatrix("Im T is singular");
  }
  // eq2: (w^{-1})^t = T_I + T_R T_I^{-1} T_R, invertible iff T is.
  RationalMatrix w;
  try {
    w = exact_inverse(ti + tr * tii * tr).transpose();
  } catch (const SingularMatrix&) {
    throw SingularPeriodMatrix("T is singular; the matching equations have no solution");
  }
  // eq4: B^t = -T_I^{-1} T_R w^t.
  const RationalMatrix B = -(w * tr.transpose() * tii.transpose());
  return from_parts(B, w);
}

}  // namespace torus_mirror
