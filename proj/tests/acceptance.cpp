// Runs acceptance criteria 1-10 and prints one line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "torus_mirror/automorphy.hpp"
#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/fukaya.hpp"
#include "torus_mirror/gcs.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"
#include "torus_mirror/torus.hpp"
#include "torus_mirror/verify.hpp"

using namespace torus_mirror;

namespace {

constexpr double kIntertwiningTol = 1e-8;
constexpr double kUnitaryTol = 1e-12;
constexpr std::uint64_t kSeed = 20240501;

const QComplex kI = QComplex::i();
const IntMatrix kA1{{0, 1}, {1, 1}};
const IntMatrix kA2{{1, 1}, {1, -1}};
const IntMatrix kDelta5{{0, 0}, {0, 1}};

ComplexMatrix example_T() { return ComplexMatrix{{kI, QComplex(1)}, {QComplex(-1), kI}}; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts failures and keeps the first message.
struct Counter {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    ++total;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& detail) const {
    std::ostringstream os;
    os << detail << "; " << total << " checks, " << failed << " failed";
    if (failed) os << " (first: " << first << ")";
    return {failed == 0 && total > 0, os.str()};
  }
};

template <class M>
std::string str(const M& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

RationalMatrix pairing(std::size_t n) {
  RationalMatrix q(4 * n, 4 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    q(i, 2 * n + i) = 1;
    q(2 * n + i, i) = 1;
  }
  return q;
}

bool axioms(const RationalMatrix& m, std::size_t n) {
  const RationalMatrix q = pairing(n);
  return m * m == -RationalMatrix::identity(4 * n) && m.transpose() * q * m == q;
}

ComplexMatrix pd_nonsingular(Rng& rng, std::size_t n) {
  for (;;) {
    ComplexMatrix t = random_pd_period(rng, n);
    if (!oracle::det(t).is_zero()) return t;
  }
}

Outcome criterion1() {
  Rng rng(kSeed);
  Counter c;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 4;
    const ComplexMatrix T = pd_nonsingular(rng, n);
    c(axioms(gcs_from_complex_structure(T).M, n), "I_J for T = " + str(T));
    const ComplexMatrix tau = -oracle::inverse(T).transpose();
    c(axioms(gcs_from_complexified_symplectic(real_part(tau), imag_part(tau)).M, n),
      "I_omega for T = " + str(T));
  }
  return c.outcome("200 random T with Im T PD, n = 1..4, exact");
}

Outcome criterion2() {
  Rng rng(kSeed + 2);
  Counter c;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 3;
    const ComplexMatrix T = pd_nonsingular(rng, n);
    const ComplexMatrix tau = -oracle::inverse(T).transpose();
    const MirrorRelationReport rep = check_mirror_relations(T);
    c(rep.tau == tau, "tau for T = " + str(T));
    for (const auto& rel : rep.relations) c(rel.residual.is_zero(), rel.name + " for T = " + str(T));
    c(solve_mirror_matching(T) == tau, "matching solution for T = " + str(T));
  }
  return c.outcome("100 random nonsingular T (Im T PD), n = 1..3, eq1-eq7, right, left, matching");
}

Outcome criterion3() {
  Rng rng(kSeed + 3);
  Counter c;
  constexpr int kPerClass = 500;
  auto check = [&](const ComplexMatrix& T, std::size_t rank, const DeltaShift& d) {
    std::size_t ones = 0;
    bool zero_one = true;
    for (const auto& v : d.delta.data()) {
      ones += v == 1;
      zero_one = zero_one && (v == 0 || v == 1);
    }
    c(!exact_det(T - to_complex(d.delta)).is_zero() && zero_one && ones == T.rows() - rank,
      "T = " + str(T));
  };
  std::size_t classes = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t rank = 0; rank < n; ++rank, ++classes)
      for (int k = 0; k < kPerClass; ++k) {
        if (2 * rank >= n) {
          const ComplexMatrix T = random_singular_pd(rng, n, rank);
          check(T, rank, find_delta(T));
        } else if (rank == 0) {
          check(ComplexMatrix(n, n), 0, find_delta_any_rank(ComplexMatrix(n, n)));
        } else {
          const ComplexMatrix T = random_low_rank(rng, n, rank);
          check(T, rank, find_delta_any_rank(T));
        }
      }
  // Spot-check the determinant against the cofactor oracle on small sizes.
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 3;
    const ComplexMatrix T = random_singular_pd(rng, n, n - 1);
    c(!oracle::det(T - to_complex(find_delta(T).delta)).is_zero(), "cofactor det for T = " + str(T));
  }
  IntMatrix expected(5, 5);
  expected(2, 3) = 1;
  expected(3, 4) = 1;
  expected(4, 1) = 1;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix T = staircase_family_5x5(rng);
    const DeltaShift d = find_delta_any_rank(T);
    c(d.delta == expected && !exact_det(T - to_complex(d.delta)).is_zero(), "5x5 family T = " + str(T));
  }
  return c.outcome(std::to_string(classes) + " rank classes x 500 for n = 2..6, plus 100 of the 5x5 family");
}

Outcome criterion4() {
  Counter c;
  std::size_t exhaustive = 0, sampled = 0;
  auto check = [&](const IntMatrix& A) {
    for (long r = 1; r <= 6; ++r) {
      const Integer rp = compute_rank(r, A).rprime;
      c(rp == oracle::rank_from_divisors(r, A), "r = " + std::to_string(r) + ", A = " + str(A));
    }
  };
  auto box = [&](std::size_t n, long b) {
    std::vector<long> digits(n * n, -b);
    for (;;) {
      IntMatrix A(n, n);
      for (std::size_t k = 0; k < digits.size(); ++k) A(k / n, k % n) = digits[k];
      check(A);
      ++exhaustive;
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] > b) digits[k++] = -b;
      if (k == digits.size()) break;
    }
  };
  box(1, 6);
  box(2, 6);
  box(3, 1);
  Rng rng(kSeed + 4);
  for (int k = 0; k < 20000; ++k, ++sampled) check(random_int_matrix(rng, 3, 3, 6));
  std::ostringstream os;
  os << "exhaustive n <= 2 with |a| <= 6 and n = 3 with |a| <= 1 (" << exhaustive << " matrices), "
     << sampled << " sampled n = 3 with |a| <= 6; r = 1..6";
  return c.outcome(os.str());
}

Outcome criterion5() {
  Rng rng(kSeed + 5);
  Counter c;
  std::size_t holo = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 3;
    ComplexMatrix T;
    IntMatrix delta(n, n);
    if (k % 2 == 0) {
      T = random_singular_pd(rng, n, n - 1);
      delta = find_delta(T).delta;
    } else {
      T = random_pd_period(rng, n);
      for (std::size_t i = 0; i < n; ++i) delta(i, i) = rng.uniform_int(0, 1);
      if (exact_det(T - to_complex(delta)).is_zero()) delta = IntMatrix(n, n);
      if (exact_det(T - to_complex(delta)).is_zero()) delta(0, 0) = 1;
    }
    const Biholomorphism phi = biholomorphism(T, delta);
    const IntMatrix A = (k / 2) % 2 == 0 ? random_admissible(rng, phi.Tprime) : random_int_matrix(rng, n, n, 2);
    const ComplexMatrix Tp = oracle::inverse(to_complex(delta) - T);
    const bool a = oracle::symmetric(to_complex(A) * Tp);
    const bool b = oracle::symmetric(imag_part(T).transpose() * to_rational(A)) &&
                   oracle::symmetric(to_rational(A).transpose() * real_part(T - to_complex(delta)));
    const BundleSpec spec = make_bundle_spec(1, A, phi.Tprime, RationalVector(n), RationalVector(n));
    const bool cflat = pullback_connection(spec, phi).z02_times_2pi.is_zero();
    holo += a;
    c(a == b && b == cflat, "T = " + str(T) + ", A = " + str(A));
  }
  c(holo > 0 && holo < 300, "both truth values occur");
  return c.outcome("300 random (T, delta, A); " + std::to_string(holo) + " holomorphic");
}

Outcome criterion6() {
  Counter c;
  const ComplexMatrix T = example_T();
  const ComplexMatrix Tp = oracle::inverse(to_complex(kDelta5) - T);
  c(Tp == ComplexMatrix{{QComplex(1) + kI, kI}, {-kI, QComplex(1)}}, "T' = " + str(Tp));
  c(biholomorphism(T, kDelta5).Tprime == Tp, "library T'");
  c(find_delta(T).delta == kDelta5, "find_delta");
  c(oracle::symmetric(to_complex(kA1) * Tp), "A1 T' symmetric");
  c(!oracle::symmetric(to_complex(kA1) * T), "A1 T not symmetric");
  c(oracle::symmetric(to_complex(kA2) * T), "A2 T symmetric");
  c(!oracle::symmetric(to_complex(kA2) * Tp), "A2 T' not symmetric");
  const SetClassification sc = classify_sets(T, kDelta5, 1);
  bool a1 = false, a2 = false;
  for (const auto& e : sc.entries) {
    if (e.A == kA1) a1 = e.in_delta && !e.in_syz;
    if (e.A == kA2) a2 = e.in_syz && !e.in_delta;
  }
  c(a1 && a2 && !sc.delta_only.empty() && !sc.syz_only.empty(), "E_delta != E_SYZ at bound 1");
  std::ostringstream os;
  os << "worked example; bound 1: " << sc.delta_only.size() << " delta-only, " << sc.syz_only.size()
     << " SYZ-only";
  return c.outcome(os.str());
}

Outcome criterion7() {
  Rng rng(kSeed + 7);
  Counter c;
  int instances = 0;
  while (instances < 100) {
    const std::size_t n = 2 + instances % 3;
    const ComplexMatrix T = random_pd_period(rng, n);
    IntMatrix delta(n, n);
    for (std::size_t i = 0; i < n; ++i) delta(i, (i + 1) % n) = rng.uniform_int(0, 1);
    if (exact_det(T - to_complex(delta)).is_zero()) continue;
    const Biholomorphism phi = biholomorphism(T, delta);
    const IntMatrix A = random_admissible(rng, phi.Tprime);
    if (A.is_zero()) continue;
    ++instances;
    const long r = rng.uniform_int(1, 3);
    const Rational s = oracle::ratio(oracle::rank_by_counting(r, A), Integer(r));
    RationalMatrix R = oracle::inverse(imag_part(T)).transpose() * to_rational(A).transpose();
    R *= s;
    const ComplexMatrix Rc = to_complex(R);
    const RationalMatrix Ar = to_rational(A), dr = to_rational(delta);
    RationalMatrix ggp = -Ar, gpg = Ar.transpose(), gpgp = Ar.transpose() * dr - dr.transpose() * Ar;
    ggp *= s;
    gpg *= s;
    gpgp *= s;
    const std::string w = "T = " + str(T) + ", A = " + str(A);
    // Im R(2pi u, 2pi v) / pi = Im(u^t (4 pi R) conj v) on the generators.
    c(imag_part(Rc).is_zero(), "gamma-gamma " + w);
    c(imag_part(T.transpose() * Rc * conj(T)) == gpgp, "gamma'-gamma' " + w);
    c(imag_part(Rc * conj(T)) == ggp, "gamma-gamma' " + w);
    c(imag_part(T.transpose() * Rc) == gpg, "gamma'-gamma " + w);
    const CurvatureFactor cf = curvature_factor(r, A, phi);
    const PairingTable pt = im_pairings(cf, phi, A);
    c(cf.R_times_4pi == R && pt.ok() && pt.ggp == ggp && pt.gpgp == gpgp, "library table " + w);
    c(pt.aux_R_conjT, "Im(R conj T) " + w);
  }
  return c.outcome("100 random admissible instances, n = 2..4, r = 1..3, exact");
}

Outcome criterion8() {
  Counter c;
  const ComplexMatrix T2{{QComplex(2) * kI, QComplex(2)}, {QComplex(-2), QComplex(2) * kI}};
  struct Case {
    std::string name;
    ComplexMatrix T;
    Integer r;
    IntMatrix A;
    Integer rprime;
  };
  const std::vector<Case> cases = {{"r=1, A1", example_T(), 1, kA1, 1},
                                   {"r=2, A = [[1,2],[2,0]]", T2, 2, IntMatrix{{1, 2}, {2, 0}}, 2},
                                   {"r=2, A1", example_T(), 2, kA1, 4}};
  IntertwiningOptions opts;
  opts.samples = 50;
  opts.seed = kSeed;
  opts.tol = kIntertwiningTol;
  opts.unitary_tol = kUnitaryTol;
  double worst = 0, worst_unitary = 0;
  for (const auto& k : cases) {
    const Biholomorphism phi = biholomorphism(k.T, kDelta5);
    const RationalVector p{Rational(1, 3), Rational(-1, 5)}, q{Rational(2, 7), Rational(1, 2)};
    const BundleSpec spec = make_bundle_spec(k.r, k.A, phi.Tprime, p, q);
    c(spec.rank().rprime == k.rprime, k.name + ": r'");
    const CurvatureFactor cf = curvature_factor(k.r, k.A, phi);
    const GaugeTransform g = gauge_transform(spec, phi, cf);
    c(g.calA_relation && g.calA_symmetric, k.name + ": conj(CalA) - CalA == (2 pi / i) R");
    const IntertwiningReport rep = verify_intertwining(spec, phi, opts);
    c(rep.max_residual <= kIntertwiningTol, k.name + ": intertwining " + std::to_string(rep.max_residual));
    c(rep.max_unitarity_defect <= kUnitaryTol, k.name + ": unitarity");
    c(rep.phases_exact_unitary, k.name + ": exact phases");
    c(rep.cocycle_exact, k.name + ": cocycle relations");
    c(rep.max_cocycle_residual <= kIntertwiningTol, k.name + ": cocycle identity");
    c(rep.samples == 50, k.name + ": sample count");
    worst = std::max(worst, rep.max_residual);
    worst_unitary = std::max(worst_unitary, rep.max_unitarity_defect);
  }
  std::ostringstream os;
  os << "r' in {1, 2, 4}, 50 samples x 2n generators; max residual " << worst << " (tol "
     << kIntertwiningTol << "), max unitarity defect " << worst_unitary << " (tol " << kUnitaryTol << ")";
  return c.outcome(os.str());
}

Outcome criterion9() {
  Counter c;
  const InjectivityResult inj = injectivity_check(example_T(), kDelta5, 1);
  c(inj.objects > 0, "objects enumerated");
  c(inj.collisions == 0, "canonical key collision");
  c(inj.fukaya_failures == 0, "object failing (f1)/(f2)");
  c(inj.cocycle_failures == 0, "unitary relations");
  std::ostringstream os;
  os << inj.bundles << " bundles, " << inj.objects << " objects over all det-phase branches, "
     << inj.distinct_keys << " distinct keys";
  return c.outcome(os.str());
}

Outcome criterion10() {
  Counter c;
  VerifyConfig cfg;
  cfg.seed = kSeed;
  for (const auto& suite : suite_names()) {
    const std::string a = run_suite(suite, cfg).to_json().dump();
    const std::string b = run_suite(suite, cfg).to_json().dump();
    c(a == b, suite);
  }
  return c.outcome("every suite twice with seed " + std::to_string(kSeed) + ", byte comparison");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"GCS axioms", criterion1},
      {"mirror-relation chain", criterion2},
      {"delta-finder", criterion3},
      {"rank formula", criterion4},
      {"condition equivalences", criterion5},
      {"worked example reproduction", criterion6},
      {"pairing identities", criterion7},
      {"gauge transform intertwining", criterion8},
      {"object bijection shadow", criterion9},
      {"determinism", criterion10}};
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << "criterion " << (k + 1) << " [" << criteria[k].first << "]: " << (o.pass ? "PASS" : "FAIL")
              << " -- " << o.detail << " (" << s << " s)" << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << total << " s)" << std::endl;
  return failures ? 1 : 0;
}
