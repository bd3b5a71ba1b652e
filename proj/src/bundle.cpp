#include "torus_mirror/bundle.hpp"

#include "torus_mirror/errors.hpp"

namespace torus_mirror {
namespace {

// Largest r' for which explicit r' x r' matrices are built.
constexpr unsigned long kMaxExplicitRank = 1UL << 16;

ComplexMatrix times_i_over_r(const ComplexMatrix& m, const Integer& r) {
  ComplexMatrix out = m;
  out *= QComplex(Rational(0), Rational(1) / Rational(r));
  return out;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

// Antisymmetrization that keeps the 2-form w^t M w: (M - M^t) / 2.
ComplexMatrix form_part(const ComplexMatrix& m) {
  ComplexMatrix out = m - m.transpose();
  out *= QComplex(Rational(1, 2));
  return out;
}

}  // namespace

RankData compute_rank(const Integer& r, const IntMatrix& A) {
  if (r < 1) throw std::invalid_argument("r must be a positive integer");
  if (!A.is_square()) throw std::invalid_argument("A must be square");
  RankData out;
  out.r = r;
  out.snf = smith_normal_form(A);
  out.rprime = 1;
  for (const auto& d : out.snf.divisors) {
    if (d == 0) continue;
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t());
    out.divisors.push_back(d);
    out.r_factors.push_back(Integer(r / g));
    out.a_factors.push_back(Integer(d / g));
    out.rprime *= out.r_factors.back();
  }
  return out;
}

bool is_holomorphic(const IntMatrix& A, const ComplexMatrix& Tprime) {
  if (A.rows() != Tprime.rows() || A.cols() != Tprime.cols())
    throw std::invalid_argument("A and T' must have equal shape");
  return (to_complex(A) * Tprime).is_symmetric();
}

HolomorphicConditions holomorphic_conditions(const IntMatrix& A, const ComplexMatrix& T,
                                             const IntMatrix& delta) {
  const RationalMatrix a = to_rational(A);
  HolomorphicConditions c;
  c.im_part = (imag_part(T).transpose() * a).is_symmetric();
  c.re_part = (a.transpose() * (real_part(T) - to_rational(delta))).is_symmetric();
  return c;
}

ComplexMatrix curvature_02_part(const IntMatrix& A, const ComplexMatrix& Tprime) {
  const ComplexMatrix d = exact_inverse(Tprime - conj(Tprime));
  return (Tprime * d).transpose() * to_complex(A).transpose() * d;
}

CocycleCheck check_cocycle(const std::vector<MonomialMatrix>& V, const std::vector<MonomialMatrix>& U,
                           const Integer& r, const IntMatrix& c, const IntMatrix& m) {
  const std::size_t n = V.size();
  if (U.size() != n) throw std::invalid_argument("V and U differ in count");
  const Rational zeta = Rational(1) / Rational(r);
  CocycleCheck out{true, true, true};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j < k && V[j] * V[k] != V[k] * V[j]) out.v_commute = false;
      if (j < k && U[j] * U[k] != (U[k] * U[j]).scaled(zeta * Rational(c(j, k))))
        out.u_relation = false;
      if ((U[k] * V[j]).scaled(-zeta * Rational(m(k, j))) != V[j] * U[k]) out.mixed = false;
    }
  return out;
}

CocycleCheck verify_unitary_set(const UnitarySet& set, const IntMatrix& A) {
  const std::size_t n = A.rows();
  return check_cocycle(set.V, set.U, set.r, IntMatrix(n, n), A);
}

UnitarySet build_unitary_set(const Integer& r, const IntMatrix& A) {
  UnitarySet out;
  out.r = r;
  out.rank = compute_rank(r, A);
  const RankData& rk = out.rank;
  const std::size_t n = A.rows();
  const std::size_t s = rk.divisors.size();
  if (rk.rprime > kMaxExplicitRank)
    throw ConstructionFailed("r' = " + rk.rprime.get_str() + " is too large for explicit matrices");

  std::vector<std::size_t> sizes(s);
  for (std::size_t i = 0; i < s; ++i) sizes[i] = rk.r_factors[i].get_ui();

  // Factor i carries a shift and clock^{a'_i}; other factors are identities.
  auto embed = [&](std::size_t i, const MonomialMatrix& local) {
    MonomialMatrix acc = MonomialMatrix::identity(1);
    for (std::size_t f = 0; f < s; ++f)
      acc = kron(acc, f == i ? local : MonomialMatrix::identity(sizes[f]));
    return acc;
  };
  std::vector<MonomialMatrix> hat_v, hat_u;
  for (std::size_t i = 0; i < s; ++i) {
    hat_v.push_back(embed(i, MonomialMatrix::shift(sizes[i])));
    hat_u.push_back(embed(i, MonomialMatrix::clock(
                                 sizes[i], Rational(rk.a_factors[i]) / Rational(rk.r_factors[i]))));
  }

  // A = left^{-1} D right^{-1}: V_j uses column j of right^{-1}, U_k row k of left^{-1}.
  const IntMatrix right_inv = unimodular_inverse(rk.snf.right);
  const IntMatrix left_inv = unimodular_inverse(rk.snf.left);
  const std::size_t dim = rk.rprime.get_ui();
  for (std::size_t j = 0; j < n; ++j) {
    MonomialMatrix v = MonomialMatrix::identity(dim);
    MonomialMatrix u = MonomialMatrix::identity(dim);
    for (std::size_t i = 0; i < s; ++i) {
      v = v * hat_v[i].pow(mod_nonneg(right_inv(i, j), rk.r_factors[i]));
      u = u * hat_u[i].pow(mod_nonneg(left_inv(j, i), rk.r_factors[i]));
    }
    out.V.push_back(std::move(v));
    out.U.push_back(std::move(u));
  }

  if (!verify_unitary_set(out, A).ok())
    throw ConstructionFailed("clock/shift assignment does not satisfy the cocycle relations");
  return out;
}

PullbackUnitaries pullback_unitaries(const UnitarySet& set, const IntMatrix& delta) {
  const std::size_t n = set.V.size();
  if (delta.rows() != n || delta.cols() != n) throw std::invalid_argument("delta must be n x n");
  const std::size_t dim = set.rank.rprime.get_ui();
  PullbackUnitaries pb;
  pb.V = set.U;
  for (std::size_t k = 0; k < n; ++k) {
    MonomialMatrix u = MonomialMatrix::identity(dim);
    for (std::size_t l = 0; l < n; ++l) u = u * set.U[l].pow(delta(l, k));
    pb.U.push_back(u * set.V[k].inverse());
  }
  return pb;
}

CocycleCheck verify_pullback_unitaries(const PullbackUnitaries& pb, const Integer& r,
                                       const IntMatrix& A, const IntMatrix& delta) {
  const IntMatrix atd = A.transpose() * delta;
  return check_cocycle(pb.V, pb.U, r, atd - atd.transpose(), A.transpose());
}

DetPhases det_phases(const std::vector<MonomialMatrix>& V, const std::vector<MonomialMatrix>& U) {
  DetPhases out;
  for (const auto& v : V) out.xi_turns.push_back(v.det_turn());
  for (const auto& u : U) out.theta_turns.push_back(u.det_turn());
  return out;
}

ComplexVector BundleSpec::mu() const {
  ComplexVector qc(q.begin(), q.end());
  ComplexVector m = mat_vec(Tprime.transpose(), qc);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += QComplex(p[i]);
  return m;
}

BundleSpec make_bundle_spec(const Integer& r, const IntMatrix& A, const ComplexMatrix& Tprime,
                            const RationalVector& p, const RationalVector& q) {
  const std::size_t n = A.rows();
  if (!A.is_square() || Tprime.rows() != n || Tprime.cols() != n || p.size() != n ||
      q.size() != n)
    throw std::invalid_argument("bundle data shapes disagree");
  return {r, A, Tprime, p, q, build_unitary_set(r, A)};
}

std::pair<RationalVector, RationalVector> split_mu(const ComplexVector& mu,
                                                   const ComplexMatrix& Tprime) {
  const std::size_t n = mu.size();
  RationalMatrix im_mu(n, 1), re_mu(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    re_mu(i, 0) = mu[i].real();
    im_mu(i, 0) = mu[i].imag();
  }
  const RationalMatrix q = exact_inverse(imag_part(Tprime).transpose()) * im_mu;
  const RationalMatrix p = re_mu - real_part(Tprime).transpose() * q;
  return {p.col(0), q.col(0)};
}

ConnectionData pullback_connection(const BundleSpec& spec, const Biholomorphism& phi) {
  const std::size_t n = spec.n();
  const Integer& r = spec.r;
  const ComplexMatrix at = to_complex(spec.A).transpose();
  const ComplexMatrix d = to_complex(phi.delta);
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexVector mu = spec.mu();
  ConnectionData c;

  c.XY_linear_times_2pi = -times_i_over_r(at, r);
  c.XY_curvature_times_2pi = c.XY_linear_times_2pi;
  const QComplex minus_i_over_r(Rational(0), -Rational(1) / Rational(r));
  for (const auto& m : mu) c.XY_constant_times_2pi.push_back(minus_i_over_r * m);

  // (dx; dy) enters through dY = dx + delta dy and X = -y.
  ComplexMatrix i_delta(n, 2 * n);
  i_delta.set_block(0, 0, id);
  i_delta.set_block(0, n, d);
  c.xy_linear_times_2pi = times_i_over_r(at, r) * i_delta;
  const ComplexVector c_xy = mat_vec(i_delta.transpose(), mu);
  for (const auto& m : c_xy) c.xy_constant_times_2pi.push_back(minus_i_over_r * m);

  // d(y^t L w) = dy^t L w, as a form matrix on (dx; dy).
  ComplexMatrix n_xy(2 * n, 2 * n);
  n_xy.set_block(n, 0, c.xy_linear_times_2pi);
  c.xy_curvature_times_2pi = form_part(n_xy);

  ComplexMatrix n_XY(2 * n, 2 * n);
  n_XY.set_block(0, n, c.XY_curvature_times_2pi);
  const ComplexMatrix J = to_complex(phi.real_matrix);
  c.chain_rule_ok = form_part(J.transpose() * n_XY * J) == c.xy_curvature_times_2pi;

  // (dx; dy) = M (dz; dz-bar) with dy = D(dz - dz-bar), dx = dz - T dy.
  const ComplexMatrix& T = phi.T;
  const ComplexMatrix D = exact_inverse(T - conj(T));
  ComplexMatrix M(2 * n, 2 * n);
  M.set_block(0, 0, id - T * D);
  M.set_block(0, n, T * D);
  M.set_block(n, 0, D);
  M.set_block(n, n, -D);
  const ComplexMatrix G = M.transpose() * c.xy_curvature_times_2pi * M;
  const ComplexMatrix g11 = G.block(0, 0, n, n);
  const ComplexMatrix g12 = G.block(0, n, n, n);
  const ComplexMatrix g21 = G.block(n, 0, n, n);
  const ComplexMatrix g22 = G.block(n, n, n, n);
  c.z11_times_2pi = g12 - g21.transpose();
  c.z20_times_2pi = form_part(g11);
  c.z02_times_2pi = form_part(g22);
  c.z11_expected_times_2pi = times_i_over_r(D.transpose() * at, r);
  return c;
}

}  // namespace torus_mirror
