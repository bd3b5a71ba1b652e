#pragma once

// Monomial matrices whose nonzero entries are roots of unity, kept exact as a
// permutation plus rational "turns" (entry = exp(2 pi i * turn), turn mod 1).

#include <complex>
#include <cstddef>
#include <vector>

#include "torus_mirror/exact.hpp"

namespace torus_mirror {

/// Reduces a rational number of turns into [0, 1).
Rational reduce_turn(const Rational& t);

class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  /// Column k has its single nonzero entry exp(2 pi i turns[k]) in row perm[k].
  MonomialMatrix(std::vector<std::size_t> perm, std::vector<Rational> turns);

  static MonomialMatrix identity(std::size_t size);
  /// e_k -> e_{k+1 mod size}.
  static MonomialMatrix shift(std::size_t size);
  /// diag(exp(2 pi i * step * k)), k = 0..size-1.
  static MonomialMatrix clock(std::size_t size, const Rational& step);

  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Rational>& turns() const { return turns_; }

  MonomialMatrix inverse() const;
  MonomialMatrix pow(long e) const;
  MonomialMatrix pow(const Integer& e) const;
  /// exp(2 pi i t) * this.
  MonomialMatrix scaled(const Rational& t) const;

  /// det = sign(perm) * exp(2 pi i sum(turns)), returned as a turn in [0, 1).
  Rational det_turn() const;

  std::complex<double> entry(std::size_t i, std::size_t j) const;
  std::vector<std::complex<double>> dense() const;  // row-major

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.perm_ == b.perm_ && a.turns_ == b.turns_;
  }
  friend bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) { return !(a == b); }

 private:
  std::vector<std::size_t> perm_;
  std::vector<Rational> turns_;
};

/// Tensor (Kronecker) product; index (i, j) maps to i * b.size() + j.
MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);

/// The turn c with a b == exp(2 pi i c) b a, if the two products are
/// proportional; returns false otherwise.
bool commutator_turn(const MonomialMatrix& a, const MonomialMatrix& b, Rational& c);

/// exp(2 pi i t) in double precision.
std::complex<double> unit_phase(const Rational& t);

}  // namespace torus_mirror
