#include "torus_mirror/fukaya.hpp"

#include <numbers>
#include <sstream>

#include "torus_mirror/errors.hpp"

namespace torus_mirror {
namespace {

Rational floor_div(const Rational& a, const Integer& b) {
  const Rational q = a / Rational(b);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(fl);
}

void write_vector(std::ostream& os, const RationalVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
}

}  // namespace

double PhaseReal::to_double() const {
  return base.get_d() + 2.0 * std::numbers::pi * turns.get_d();
}

PhaseVector to_phase_vector(const RationalVector& v) {
  PhaseVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back({x, Rational(0)});
  return out;
}

std::string side_name(Side s) { return s == Side::CheckTprime ? "check-Tprime" : "check-T"; }

Side parse_side(const std::string& s) {
  if (s == "check-Tprime") return Side::CheckTprime;
  if (s == "check-T") return Side::CheckT;
  throw InputError("unknown side '" + s + "' (expected check-Tprime or check-T)");
}

FukayaCheck check_fukaya_object(const Integer& r, const IntMatrix& A, Side side,
                                const Biholomorphism& phi) {
  if (r < 1) throw std::invalid_argument("r must be a positive integer");
  const RationalMatrix a = to_rational(A);
  FukayaCheck c;
  if (side == Side::CheckTprime) {
    // Mirror form -(T'^{-1})^t on the (X, Y) torus.
    const ComplexMatrix form = -exact_inverse(phi.Tprime).transpose();
    c.f1 = (imag_part(form) * a).is_symmetric();
    c.f2 = (real_part(form) * a).is_symmetric();
  } else {
    // Mirror form T - delta on the (x, y) torus.
    const ComplexMatrix form = phi.T - to_complex(phi.delta);
    c.f1 = (imag_part(form).transpose() * (-a)).is_symmetric();
    c.f2 = (a.transpose() * real_part(form)).is_symmetric();
  }
  c.holomorphic = is_holomorphic(A, phi.Tprime);
  return c;
}

FukayaCheck check_fukaya_object(const FukayaObject& obj, const Biholomorphism& phi) {
  return check_fukaya_object(obj.lagrangian.r, obj.lagrangian.A, obj.lagrangian.side, phi);
}

MirrorImage mirror_object(const BundleSpec& spec, Side side, const std::vector<MonomialMatrix>& V,
                          const std::vector<MonomialMatrix>& U) {
  if (!is_holomorphic(spec.A, spec.Tprime))
    throw NotHolomorphic("A T' is not symmetric; the bundle is not holomorphic");
  MirrorImage out;
  out.phases = det_phases(V, U);
  const Rational scale = Rational(spec.r) / Rational(spec.rank().rprime);
  const std::size_t n = spec.n();
  for (std::size_t k = 0; k < n; ++k) {
    out.p_theta.push_back({spec.p[k], -scale * out.phases.theta_turns[k]});
    out.q_xi.push_back({spec.q[k], scale * out.phases.xi_turns[k]});
  }
  out.object.lagrangian = {side, spec.r, spec.A, out.p_theta};
  out.object.q = out.q_xi;
  return out;
}

MirrorImage mirror_object(const BundleSpec& spec, Side side) {
  return mirror_object(spec, side, spec.unitaries.V, spec.unitaries.U);
}

std::string CanonicalKey::to_string() const {
  std::ostringstream os;
  os << side_name(side) << "|slope=" << slope << "|p=";
  write_vector(os, p_base);
  os << "+2pi";
  write_vector(os, p_turns);
  os << "|q=";
  write_vector(os, q_base);
  os << "+2pi";
  write_vector(os, q_turns);
  return os.str();
}

CanonicalKey canonical_form(const FukayaObject& obj) {
  const AffineLagrangian& L = obj.lagrangian;
  const std::size_t n = L.A.rows();
  if (L.p.size() != n || obj.q.size() != n) throw std::invalid_argument("object shapes disagree");
  const Rational inv_r = Rational(1) / Rational(L.r);
  CanonicalKey key;
  key.side = L.side;
  key.slope = to_rational(L.A);
  key.slope *= inv_r;

  // Columns of [rI | A] generate r * (Z^n + (A/r) Z^n).
  IntMatrix gens(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = L.r;
  gens.set_block(0, n, L.A);
  const IntMatrix H = lower_hermite_basis(gens);

  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = L.p[i].turns;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational k = floor_div(v[i], H(i, i));
    if (k == 0) continue;
    for (std::size_t row = i; row < n; ++row) v[row] -= k * Rational(H(row, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    key.p_base.push_back(L.p[i].base * inv_r);
    key.p_turns.push_back(v[i] * inv_r);
    key.q_base.push_back(obj.q[i].base * inv_r);
    key.q_turns.push_back(reduce_turn(obj.q[i].turns * inv_r));
  }
  return key;
}

}  // namespace torus_mirror
