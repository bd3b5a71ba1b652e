#include "torus_mirror/automorphy.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "torus_mirror/errors.hpp"

namespace torus_mirror {
namespace {

using Cd = std::complex<double>;
using EMatrix = Eigen::MatrixXcd;
using EVector = Eigen::VectorXcd;

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxDenseRank = 1024;
constexpr unsigned long long kMaxEnumeration = 2000000ULL;

EMatrix to_eigen(const ComplexMatrix& m) {
  EMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

EVector to_eigen(const CVector& v) {
  EVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

EMatrix dense(const MonomialMatrix& m) {
  const std::size_t n = m.size();
  const auto d = m.dense();
  EMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = d[i * n + j];
  return out;
}

ComplexMatrix scaled(ComplexMatrix m, const QComplex& s) {
  m *= s;
  return m;
}

double relative_residual(const EMatrix& lhs, const EMatrix& rhs) {
  return (lhs - rhs).norm() / rhs.norm();
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Numeric copies of the exact data, built once per verification.
struct NumericGauge {
  EMatrix R;  // R itself, not 4 pi R
  EMatrix CalA, W, Wbar;
  EVector mu;
  double r = 1, rprime = 1;

  Cd form(const EVector& z, const EVector& w) const { return (z.transpose() * R * w.conjugate())(0); }

  Cd log_psi(const EVector& z) const {
    const Cd i(0, 1);
    const EVector zb = z.conjugate();
    const Cd q1 = (z.transpose() * CalA.conjugate() * z)(0);
    const Cd q2 = (zb.transpose() * CalA * zb)(0);
    const Cd q3 = (z.transpose() * CalA * zb)(0);
    const Cd l1 = (zb.transpose() * W * mu)(0);
    const Cd l2 = (z.transpose() * Wbar * mu.conjugate())(0);
    return i / (4 * kPi * rprime) * (q1 + q2) - i / (2 * kPi * rprime) * q3 +
           i / (2 * kPi * r) * (l1 - l2);
  }
};

NumericGauge numeric(const GaugeTransform& g, const CurvatureFactor& cf) {
  NumericGauge out;
  out.R = to_eigen(to_complex(cf.R_times_4pi)) / (4 * kPi);
  out.CalA = to_eigen(g.CalA);
  out.W = to_eigen(g.W);
  out.Wbar = to_eigen(g.Wbar);
  out.mu.resize(g.mu.size());
  for (std::size_t i = 0; i < g.mu.size(); ++i) out.mu(i) = g.mu[i].to_complex();
  out.r = g.r.get_d();
  out.rprime = g.rprime.get_d();
  return out;
}

}  // namespace

std::complex<double> CurvatureFactor::form(const CVector& z, const CVector& w) const {
  const EMatrix R = to_eigen(to_complex(R_times_4pi)) / (4 * kPi);
  return (to_eigen(z).transpose() * R * to_eigen(w).conjugate())(0);
}

CurvatureFactor curvature_factor(const Integer& r, const IntMatrix& A, const Biholomorphism& phi) {
  if (!is_holomorphic(A, phi.Tprime))
    throw NotHolomorphic("A T' is not symmetric; no curvature factor");
  CurvatureFactor cf;
  cf.r = r;
  cf.rprime = compute_rank(r, A).rprime;
  const Rational s = Rational(cf.rprime) / Rational(r);
  const RationalMatrix at = to_rational(A).transpose();
  cf.R_times_4pi = exact_inverse(imag_part(phi.T)).transpose() * at;
  cf.R_times_4pi *= s;
  const ComplexMatrix D = exact_inverse(phi.T - conj(phi.T));
  cf.R_times_4pi_alt = scaled(D.transpose() * to_complex(at), QComplex(Rational(0), 2 * s));
  cf.forms_agree = cf.R_times_4pi_alt == to_complex(cf.R_times_4pi);
  cf.symmetric = cf.R_times_4pi.is_symmetric();
  return cf;
}

PairingTable im_pairings(const CurvatureFactor& R, const Biholomorphism& phi, const IntMatrix& A) {
  const std::size_t n = A.rows();
  const ComplexMatrix Rc = to_complex(R.R_times_4pi);
  const ComplexMatrix& T = phi.T;
  const ComplexMatrix Tb = conj(T);
  const Rational s = Rational(R.rprime) / Rational(R.r);
  const RationalMatrix a = to_rational(A);
  const RationalMatrix d = to_rational(phi.delta);

  PairingTable t;
  t.gg = imag_part(Rc);
  t.gpgp = imag_part(T.transpose() * Rc * Tb);
  t.ggp = imag_part(Rc * Tb);
  t.gpg = imag_part(T.transpose() * Rc);
  t.gg_expected = RationalMatrix(n, n);
  t.gpgp_expected = a.transpose() * d - d.transpose() * a;
  t.gpgp_expected *= s;
  t.ggp_expected = a;
  t.ggp_expected *= -s;
  t.gpg_expected = a.transpose();
  t.gpg_expected *= s;

  RationalMatrix sa = a;
  sa *= s;
  t.aux_R_conjT = imag_part(Rc * Tb) == -sa;
  t.aux_R_T = imag_part(Rc * T) == sa;

  auto compare = [&](const char* name, const RationalMatrix& got, const RationalMatrix& want) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (got(j, k) != want(j, k)) {
          std::ostringstream os;
          os << name << '(' << j << ',' << k << "): " << got(j, k) << " != " << want(j, k);
          t.mismatches.push_back(os.str());
        }
  };
  compare("gamma,gamma", t.gg, t.gg_expected);
  compare("gamma',gamma'", t.gpgp, t.gpgp_expected);
  compare("gamma,gamma'", t.ggp, t.ggp_expected);
  compare("gamma',gamma", t.gpg, t.gpg_expected);
  return t;
}

void require_pairings(const PairingTable& t) {
  if (!t.mismatches.empty()) throw PairingMismatch("Im R pairing mismatch at " + t.mismatches.front());
  if (!t.aux_R_conjT) throw PairingMismatch("Im(R conj T) != -(r'/r) A");
  if (!t.aux_R_T) throw PairingMismatch("Im(R T) != (r'/r) A");
}

std::complex<double> ExactPhase::value() const {
  const Cd arg = kPi * pi_coeff.to_complex() + rest.to_complex();
  return std::exp(Cd(0, 1) * arg);
}

GaugeTransform gauge_transform(const BundleSpec& spec, const Biholomorphism& phi,
                               const CurvatureFactor& R) {
  GaugeTransform g;
  g.r = spec.r;
  g.rprime = R.rprime;
  const ComplexMatrix& T = phi.T;
  const ComplexMatrix d = to_complex(phi.delta);
  const ComplexMatrix at = to_complex(spec.A).transpose();
  g.D = exact_inverse(T - conj(T));
  g.CalA = scaled(g.D.transpose() * at * (d - T) * g.D,
                  QComplex(Rational(g.rprime) / Rational(g.r)));
  g.W = g.D.transpose() * (d - T).transpose();
  g.Wbar = g.D.transpose() * (d - conj(T)).transpose();
  g.mu = spec.mu();
  g.calA_symmetric = g.CalA.is_symmetric();
  g.calA_relation = conj(g.CalA) - g.CalA ==
                    scaled(to_complex(R.R_times_4pi), QComplex(Rational(0), Rational(-1, 2)));
  return g;
}

std::complex<double> GaugeTransform::log_psi(const CVector& z) const {
  NumericGauge ng;
  ng.CalA = to_eigen(CalA);
  ng.W = to_eigen(W);
  ng.Wbar = to_eigen(Wbar);
  ng.mu.resize(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) ng.mu(i) = mu[i].to_complex();
  ng.r = r.get_d();
  ng.rprime = rprime.get_d();
  return ng.log_psi(to_eigen(z));
}

AutomorphyFactor automorphy_factor(const BundleSpec& spec, const Biholomorphism& phi,
                                   const GaugeTransform& g) {
  AutomorphyFactor af;
  af.base = pullback_unitaries(spec.unitaries, phi.delta);
  const std::size_t n = spec.n();
  const ComplexMatrix& T = phi.T;
  const ComplexMatrix Tb = conj(T);
  const ComplexMatrix mu = column_matrix(g.mu);
  ComplexMatrix mub = mu;
  for (std::size_t i = 0; i < n; ++i) mub(i, 0) = mu(i, 0).conj();
  const QComplex inv_r(Rational(1) / Rational(g.r));
  const QComplex inv_rp(Rational(1) / Rational(g.rprime));

  const ComplexMatrix wmu = g.W * mu;
  const ComplexMatrix wbmu = g.Wbar * mub;
  for (std::size_t j = 0; j < n; ++j)
    af.gamma_phase.push_back({QComplex(0), inv_r * (wmu(j, 0) - wbmu(j, 0))});

  const ComplexMatrix quad =
      T.transpose() * conj(g.CalA) * (T - Tb) - (T - Tb).transpose() * g.CalA * Tb;
  const ComplexMatrix lin = Tb.transpose() * wmu - T.transpose() * wbmu;
  for (std::size_t k = 0; k < n; ++k)
    af.gammap_phase.push_back({inv_rp * quad(k, k), inv_r * lin(k, 0)});
  return af;
}

IntertwiningReport verify_intertwining(const BundleSpec& spec, const Biholomorphism& phi,
                                       const IntertwiningOptions& opts) {
  const CurvatureFactor cf = curvature_factor(spec.r, spec.A, phi);
  const GaugeTransform g = gauge_transform(spec, phi, cf);
  const AutomorphyFactor af = automorphy_factor(spec, phi, g);
  const NumericGauge ng = numeric(g, cf);
  const std::size_t n = spec.n();
  const std::size_t dim = spec.rank().rprime.get_ui();
  if (spec.rank().rprime > kMaxDenseRank)
    throw ConstructionFailed("r' = " + spec.rank().rprime.get_str() +
                             " is too large for dense verification");

  IntertwiningReport rep;
  rep.samples = opts.samples;
  rep.tol = opts.tol;
  rep.unitary_tol = opts.unitary_tol;

  // Generators in order gamma_1..gamma_n, gamma'_1..gamma'_n.
  const EMatrix Te = to_eigen(phi.T);
  std::vector<EVector> gens;
  std::vector<std::string> names;
  std::vector<EMatrix> base, U;
  rep.phases_exact_unitary = true;
  for (std::size_t j = 0; j < n; ++j) {
    gens.push_back(2 * kPi * EVector::Unit(n, j));
    names.push_back("gamma_" + std::to_string(j + 1));
    base.push_back(dense(af.base.V[j]));
    U.push_back(af.gamma_phase[j].value() * base.back());
    rep.phases_exact_unitary = rep.phases_exact_unitary && af.gamma_phase[j].unitary();
  }
  for (std::size_t k = 0; k < n; ++k) {
    gens.push_back(2 * kPi * Te.col(k));
    names.push_back("gamma'_" + std::to_string(k + 1));
    base.push_back(dense(af.base.U[k]));
    U.push_back(af.gammap_phase[k].value() * base.back());
    rep.phases_exact_unitary = rep.phases_exact_unitary && af.gammap_phase[k].unitary();
  }
  const EMatrix I = EMatrix::Identity(dim, dim);
  for (const auto& u : U)
    rep.max_unitarity_defect =
        std::max(rep.max_unitarity_defect, (u * u.adjoint() - I).cwiseAbs().maxCoeff());

  // Exact commutators of U(gamma) against Im R / (pi r').
  const PairingTable pt = im_pairings(cf, phi, spec.A);
  rep.cocycle_exact = verify_pullback_unitaries(af.base, spec.r, spec.A, phi.delta).ok();
  const Rational inv_rp = Rational(1) / Rational(cf.rprime);
  auto monomial = [&](std::size_t idx) -> const MonomialMatrix& {
    return idx < n ? af.base.V[idx] : af.base.U[idx - n];
  };
  auto im_pair = [&](std::size_t a, std::size_t b) -> Rational {
    if (a < n && b < n) return pt.gg(a, b);
    if (a < n) return pt.ggp(a, b - n);
    if (b < n) return pt.gpg(a - n, b);
    return pt.gpgp(a - n, b - n);
  };
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      Rational c;
      if (!commutator_turn(monomial(a), monomial(b), c) ||
          c != reduce_turn(im_pair(a, b) * inv_rp))
        rep.cocycle_exact = false;
    }

  const EMatrix ImT = Te.imag();
  const EMatrix ReT = Te.real();
  const Eigen::MatrixXd delta = to_eigen(to_complex(phi.delta)).real();
  const Eigen::MatrixXd Ad = to_eigen(to_complex(spec.A)).real();
  const Eigen::PartialPivLU<Eigen::MatrixXd> imt_lu(ImT.real());
  auto transition = [&](std::size_t idx, const EVector& z) -> Cd {
    if (idx < n) return 1.0;
    const Eigen::VectorXd y = imt_lu.solve(z.imag());
    const Eigen::VectorXd x = z.real() - ReT.real() * y;
    const double arg = Ad.col(idx - n).dot(x + delta * y) / ng.r;
    return std::exp(Cd(0, -arg));
  };
  auto j_factor = [&](std::size_t idx, const EVector& z) -> EMatrix {
    const EVector& g0 = gens[idx];
    return std::exp(ng.form(z, g0) / ng.rprime + ng.form(g0, g0) / (2 * ng.rprime)) * U[idx];
  };

  std::mt19937_64 rng(opts.seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Eigen::VectorXd x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) x(i) = 2 * kPi * uniform01(rng);
    for (std::size_t i = 0; i < n; ++i) y(i) = 2 * kPi * uniform01(rng);
    const EVector z = x.cast<Cd>() + Te * y.cast<Cd>();
    const Cd lp = ng.log_psi(z);
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
      const EMatrix lhs =
          std::exp(ng.log_psi(z + gens[idx])) * transition(idx, z) * base[idx] * std::exp(-lp);
      const double res = relative_residual(lhs, j_factor(idx, z));
      if (res > rep.max_residual || !std::isfinite(res)) {
        rep.max_residual = std::isfinite(res) ? res : INFINITY;
        rep.worst_sample = s;
        rep.worst_generator = names[idx];
      }
    }
    for (std::size_t a = 0; a < 2 * n; ++a)
      for (std::size_t b = a + 1; b < 2 * n; ++b) {
        const EMatrix left = j_factor(a, z + gens[b]) * j_factor(b, z);
        const EMatrix right = j_factor(b, z + gens[a]) * j_factor(a, z);
        rep.max_cocycle_residual = std::max(rep.max_cocycle_residual, relative_residual(left, right));
      }
  }
  return rep;
}

void require_intertwining(const IntertwiningReport& rep) {
  if (rep.ok()) return;
  std::ostringstream os;
  os << "intertwining residual " << rep.max_residual << " (tol " << rep.tol << ") at sample "
     << rep.worst_sample << ", generator " << rep.worst_generator
     << "; unitarity defect " << rep.max_unitarity_defect << ", cocycle residual "
     << rep.max_cocycle_residual << ", exact phases " << (rep.phases_exact_unitary ? "ok" : "bad")
     << ", exact cocycle " << (rep.cocycle_exact ? "ok" : "bad");
  throw ToleranceExceeded(os.str());
}

SetClassification classify_sets(const ComplexMatrix& T, const IntMatrix& delta, int bound) {
  if (bound < 0) throw InputError("bound must be non-negative");
  const std::size_t n = T.rows();
  const std::size_t cells = n * n;
  const unsigned long long base = 2ULL * static_cast<unsigned long long>(bound) + 1;
  unsigned long long total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    total *= base;
    if (total > kMaxEnumeration)
      throw BoundTooLarge("bound " + std::to_string(bound) + " enumerates more than " +
                          std::to_string(kMaxEnumeration) + " matrices");
  }
  const Biholomorphism phi = biholomorphism(T, delta);
  SetClassification out;
  out.bound = bound;
  std::vector<long> digits(cells, -bound);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    IntMatrix A(n, n);
    for (std::size_t c = 0; c < cells; ++c) A(c / n, c % n) = digits[c];
    SetEntry e{A, is_holomorphic(A, phi.Tprime), (to_complex(A) * T).is_symmetric()};
    out.delta_count += e.in_delta;
    out.syz_count += e.in_syz;
    out.both_count += e.in_delta && e.in_syz;
    if (e.in_delta && !e.in_syz) out.delta_only.push_back(A);
    if (e.in_syz && !e.in_delta) out.syz_only.push_back(A);
    out.entries.push_back(std::move(e));
    for (std::size_t c = cells; c-- > 0;) {
      if (++digits[c] <= bound) break;
      digits[c] = -bound;
    }
  }
  return out;
}

}  // namespace torus_mirror
