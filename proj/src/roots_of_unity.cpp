#include "torus_mirror/roots_of_unity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torus_mirror {

Rational reduce_turn(const Rational& t) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational out = t - Rational(fl);
  out.canonicalize();
  return out;
}

std::complex<double> unit_phase(const Rational& t) {
  const Rational red = reduce_turn(t);
  // Exact values at the quarter turns keep small cases free of roundoff.
  if (red == 0) return {1.0, 0.0};
  if (red == Rational(1, 4)) return {0.0, 1.0};
  if (red == Rational(1, 2)) return {-1.0, 0.0};
  if (red == Rational(3, 4)) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * red.get_d();
  return {std::cos(angle), std::sin(angle)};
}

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<Rational> turns)
    : perm_(std::move(perm)), turns_(std::move(turns)) {
  if (perm_.size() != turns_.size()) throw std::invalid_argument("MonomialMatrix: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p]) throw std::invalid_argument("MonomialMatrix: not a permutation");
    seen[p] = true;
  }
  for (auto& t : turns_) t = reduce_turn(t);
}

MonomialMatrix MonomialMatrix::identity(std::size_t size) {
  std::vector<std::size_t> p(size);
  for (std::size_t k = 0; k < size; ++k) p[k] = k;
  return {std::move(p), std::vector<Rational>(size)};
}

MonomialMatrix MonomialMatrix::shift(std::size_t size) {
  std::vector<std::size_t> p(size);
  for (std::size_t k = 0; k < size; ++k) p[k] = (k + 1) % size;
  return {std::move(p), std::vector<Rational>(size)};
}

MonomialMatrix MonomialMatrix::clock(std::size_t size, const Rational& step) {
  std::vector<std::size_t> p(size);
  std::vector<Rational> t(size);
  for (std::size_t k = 0; k < size; ++k) {
    p[k] = k;
    t[k] = step * Rational(static_cast<long>(k));
  }
  return {std::move(p), std::move(t)};
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<std::size_t> p(size());
  std::vector<Rational> t(size());
  for (std::size_t k = 0; k < size(); ++k) {
    p[perm_[k]] = k;
    t[perm_[k]] = -turns_[k];
  }
  return {std::move(p), std::move(t)};
}

MonomialMatrix MonomialMatrix::pow(const Integer& e) const {
  MonomialMatrix base = sgn(e) < 0 ? inverse() : *this;
  Integer k = abs(e);
  MonomialMatrix acc = identity(size());
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

MonomialMatrix MonomialMatrix::pow(long e) const { return pow(Integer(e)); }

MonomialMatrix MonomialMatrix::scaled(const Rational& t) const {
  std::vector<Rational> out = turns_;
  for (auto& v : out) v += t;
  return {perm_, std::move(out)};
}

Rational MonomialMatrix::det_turn() const {
  Rational sum = 0;
  for (const auto& t : turns_) sum += t;
  // Parity of the permutation from its cycle decomposition.
  std::vector<bool> seen(size(), false);
  std::size_t transpositions = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t c = k; !seen[c]; c = perm_[c]) {
      seen[c] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  if (transpositions % 2 == 1) sum += Rational(1, 2);
  return reduce_turn(sum);
}

std::complex<double> MonomialMatrix::entry(std::size_t i, std::size_t j) const {
  if (perm_.at(j) != i) return {0.0, 0.0};
  return unit_phase(turns_[j]);
}

std::vector<std::complex<double>> MonomialMatrix::dense() const {
  const std::size_t n = size();
  std::vector<std::complex<double>> out(n * n);
  for (std::size_t j = 0; j < n; ++j) out[perm_[j] * n + j] = unit_phase(turns_[j]);
  return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("MonomialMatrix product: size mismatch");
  // (a b) e_k = a(w_k e_{b(k)}) = w_k v_{b(k)} e_{a(b(k))}.
  std::vector<std::size_t> p(a.size());
  std::vector<Rational> t(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    p[k] = a.perm_[b.perm_[k]];
    t[k] = b.turns_[k] + a.turns_[b.perm_[k]];
  }
  return {std::move(p), std::move(t)};
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  const std::size_t nb = b.size();
  std::vector<std::size_t> p(a.size() * nb);
  std::vector<Rational> t(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      p[i * nb + j] = a.perm()[i] * nb + b.perm()[j];
      t[i * nb + j] = a.turns()[i] + b.turns()[j];
    }
  return {std::move(p), std::move(t)};
}

bool commutator_turn(const MonomialMatrix& a, const MonomialMatrix& b, Rational& c) {
  const MonomialMatrix ab = a * b;
  const MonomialMatrix ba = b * a;
  if (ab.perm() != ba.perm()) return false;
  if (ab.size() == 0) {
    c = 0;
    return true;
  }
  const Rational first = reduce_turn(ab.turns()[0] - ba.turns()[0]);
  for (std::size_t k = 1; k < ab.size(); ++k)
    if (reduce_turn(ab.turns()[k] - ba.turns()[k]) != first) return false;
  c = first;
  return true;
}

}  // namespace torus_mirror
