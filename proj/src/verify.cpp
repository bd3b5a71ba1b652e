#include "torus_mirror/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "torus_mirror/automorphy.hpp"
#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/gcs.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/sampling.hpp"
#include "torus_mirror/torus.hpp"

namespace torus_mirror {
namespace {

constexpr std::size_t kMaxWitnesses = 5;
constexpr double kUnitaryTol = 1e-12;
// Larger entries push exp(-pi Im(...)) out of double range.
constexpr long kMaxAutomorphyEntry = 6;

void add_witness(Json& w, Json item) {
  if (w.size() < kMaxWitnesses) w.push_back(std::move(item));
}

CheckRecord exact_check(std::string name, std::string predicate, bool pass,
                        Json witnesses = Json::array(), Json details = Json::object()) {
  CheckRecord c;
  c.name = std::move(name);
  c.predicate = std::move(predicate);
  c.pass = pass;
  c.kind = CheckKind::Exact;
  c.witnesses = std::move(witnesses);
  c.details = std::move(details);
  return c;
}

CheckRecord numeric_check(std::string name, std::string predicate, double residual, double tol,
                          Json witnesses = Json::array(), Json details = Json::object()) {
  CheckRecord c;
  c.name = std::move(name);
  c.predicate = std::move(predicate);
  c.pass = residual <= tol;
  c.kind = CheckKind::Numeric;
  c.residual = residual;
  c.tol = tol;
  c.witnesses = std::move(witnesses);
  c.details = std::move(details);
  return c;
}

// Tallies one predicate over a family; failures keep a few witnesses.
struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  Json witnesses = Json::array();
  void record(bool ok, const std::function<Json()>& witness) {
    ++total;
    if (ok) return;
    ++failed;
    add_witness(witnesses, witness());
  }
  CheckRecord check(std::string name, std::string predicate, Json details = Json::object()) const {
    details["instances"] = total;
    details["failures"] = failed;
    return exact_check(std::move(name), std::move(predicate), failed == 0 && total > 0, witnesses,
                       std::move(details));
  }
};

IntMatrix zero_matrix(std::size_t n) { return IntMatrix(n, n); }

Integer max_abs_entry(const IntMatrix& A) {
  Integer m = 0;
  for (const auto& v : A.data()) m = std::max<Integer>(m, abs(v));
  return m;
}

ComplexMatrix section5_T() {
  const QComplex i = QComplex::i();
  return ComplexMatrix{{i, QComplex(1)}, {QComplex(-1), i}};
}

const IntMatrix& section5_A1() {
  static const IntMatrix a{{0, 1}, {1, 1}};
  return a;
}

const IntMatrix& section5_A2() {
  static const IntMatrix a{{1, 1}, {1, -1}};
  return a;
}

// A {0,1} shift with det(T - delta) != 0, or zero when none is found quickly.
IntMatrix random_shift(Rng& rng, const ComplexMatrix& T) {
  const std::size_t n = T.rows();
  for (int attempt = 0; attempt < 20; ++attempt) {
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = rng.uniform_int(0, 1);
    if (!exact_det(T - to_complex(d)).is_zero()) return d;
  }
  return zero_matrix(n);
}

std::size_t count_ones(const IntMatrix& d, bool& zero_one) {
  std::size_t ones = 0;
  zero_one = true;
  for (const auto& v : d.data()) {
    if (v == 1) ++ones;
    else if (v != 0) zero_one = false;
  }
  return ones;
}

Json rank_json(const RankData& rk) {
  Json div = Json::array(), rf = Json::array(), af = Json::array();
  for (const auto& d : rk.divisors) div.push_back(write_integer(d));
  for (const auto& d : rk.r_factors) rf.push_back(write_integer(d));
  for (const auto& d : rk.a_factors) af.push_back(write_integer(d));
  return Json{{"r", write_integer(rk.r)},
              {"divisors", div},
              {"r_factors", rf},
              {"a_factors", af},
              {"rprime", write_integer(rk.rprime)}};
}

Json cocycle_json(const CocycleCheck& c) {
  return Json{{"v_commute", c.v_commute}, {"u_relation", c.u_relation}, {"mixed", c.mixed}};
}

std::vector<MonomialMatrix> twisted(const std::vector<MonomialMatrix>& m, unsigned mask) {
  std::vector<MonomialMatrix> out = m;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (mask & (1U << k)) out[k] = out[k].scaled(Rational(1, 2));
  return out;
}

template <class Vec>
std::string join(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- suites

Report suite_gcs(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  Tally complex_axioms, sympl_axioms, product_route, bfield_axioms, g24_mirror, dshift;
  constexpr int kInstances = 200;
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = 1 + i % 4;
    ComplexMatrix T;
    do {
      T = random_pd_period(rng, n);
    } while (exact_det(T).is_zero());
    auto wT = [&] { return write_matrix(T); };
    const GCStructure IJ = gcs_from_complex_structure(T);
    complex_axioms.record(check_axioms(IJ).ok(), wT);

    const ComplexMatrix tau = -exact_inverse(T).transpose();
    const RationalMatrix B = real_part(tau), w = imag_part(tau);
    const GCStructure Iw = gcs_from_complexified_symplectic(B, w);
    sympl_axioms.record(check_axioms(Iw).ok(), wT);
    product_route.record(gcs_from_complexified_symplectic_product(B, w).M == Iw.M, wT);
    g24_mirror.record(mirror_g24(IJ).M == Iw.M, wT);

    const RationalMatrix m = random_rational_matrix(rng, 2 * n, 2 * n);
    bfield_axioms.record(check_axioms(b_field_transform(IJ, {m - m.transpose()})).ok(), wT);
  }
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 3;
    const ComplexMatrix T = random_singular_pd(rng, n, n - 1);
    const IntMatrix d = find_delta(T).delta;
    const RationalMatrix re = real_part(T), im = imag_part(T);
    const GCStructure lhs = delta_shift_transform(gcs_from_complexified_symplectic(re, im), d);
    const GCStructure rhs = gcs_from_complexified_symplectic(re - to_rational(d), im);
    dshift.record(lhs.M == rhs.M, [&] { return write_matrix(T); });
  }
  rep.checks.push_back(complex_axioms.check("gcs.complex_structure_axioms",
                                            "I_J^2 == -I && I_J^t Q I_J == Q"));
  rep.checks.push_back(sympl_axioms.check("gcs.symplectic_axioms",
                                          "I_w(B)^2 == -I && I_w(B)^t Q I_w(B) == Q"));
  rep.checks.push_back(product_route.check(
      "gcs.symplectic_product_route", "[[I,0],[B~,I]] I_w [[I,0],[-B~,I]] == I_w(B)"));
  rep.checks.push_back(bfield_axioms.check("gcs.b_field_axioms",
                                           "e^B I_J e^-B satisfies both axioms for alternating B"));
  rep.checks.push_back(g24_mirror.check("gcs.g24_mirror",
                                        "g24^-1 I_J g24 == I_w(B) with B + i w == -(T^-1)^t"));
  rep.checks.push_back(dshift.check("gcs.delta_shift",
                                    "[[I,0],[D,I]] I_ImT(ReT) [[I,0],[-D,I]] == I_ImT(ReT - delta)"));
  return rep;
}

Report suite_mirror_relations(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  std::map<std::string, Tally> per_relation;
  std::map<std::string, std::string> predicates;
  std::vector<std::string> order;
  Tally matching;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 3;
    ComplexMatrix T;
    do {
      T = random_pd_period(rng, n);
    } while (exact_det(T).is_zero());
    const MirrorRelationReport mr = check_mirror_relations(T);
    for (const auto& rel : mr.relations) {
      if (!per_relation.count(rel.name)) {
        order.push_back(rel.name);
        predicates[rel.name] = rel.relation;
      }
      per_relation[rel.name].record(rel.residual.is_zero(), [&] { return write_matrix(T); });
    }
    matching.record(solve_mirror_matching(T) == mr.tau, [&] { return write_matrix(T); });
  }
  for (const auto& name : order)
    rep.checks.push_back(per_relation[name].check("mirror." + name, predicates[name]));
  rep.checks.push_back(matching.check("mirror.matching_solution",
                                      "solution of the g24 matching equations == -(T^-1)^t"));
  bool singular_rejected = false;
  try {
    check_mirror_relations(section5_T());
  } catch (const SingularPeriodMatrix&) {
    singular_rejected = true;
  }
  rep.checks.push_back(exact_check("mirror.singular_T_rejected",
                                   "det T == 0 => no Definition-1 mirror (SingularPeriodMatrix)",
                                   singular_rejected, Json::array({write_matrix(section5_T())})));
  return rep;
}

Report suite_delta(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  constexpr int kPerClass = 500;
  Tally pd, any;
  Json pd_classes = Json::array(), any_classes = Json::array();
  auto check_one = [](Tally& t, const ComplexMatrix& T, const DeltaShift& d) {
    const std::size_t n = T.rows();
    bool zero_one = false;
    const std::size_t ones = count_ones(d.delta, zero_one);
    const std::size_t rank = exact_rank(T);
    const QComplex det = exact_det(T - to_complex(d.delta));
    const bool ok = !det.is_zero() && det == d.det_shifted && zero_one && ones == n - rank &&
                    d.rank == rank;
    t.record(ok, [&] { return Json{{"T", write_matrix(T)}, {"delta", write_matrix(d.delta)}}; });
  };
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t rank = (n + 1) / 2; rank < n; ++rank) {
      for (int k = 0; k < kPerClass; ++k) {
        const ComplexMatrix T = random_singular_pd(rng, n, rank);
        check_one(pd, T, find_delta(T));
      }
      pd_classes.push_back(Json{{"n", n}, {"rank", rank}, {"instances", kPerClass}});
    }
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t rank = 1; 2 * rank < n; ++rank) {
      for (int k = 0; k < kPerClass; ++k) {
        const ComplexMatrix T = random_low_rank(rng, n, rank);
        check_one(any, T, find_delta_any_rank(T));
      }
      any_classes.push_back(Json{{"n", n}, {"rank", rank}, {"instances", kPerClass}});
    }
  rep.checks.push_back(pd.check("delta.positive_definite_family",
                                "det(T - delta) != 0 && delta in {0,1} && #ones == n - rank T",
                                Json{{"classes", pd_classes}}));
  rep.checks.push_back(any.check("delta.low_rank_family",
                                 "det(T - delta) != 0 && delta in {0,1} && #ones == n - rank T",
                                 Json{{"classes", any_classes},
                                      {"note", "rank < n/2 admits no positive definite Im T"}}));

  IntMatrix expected(5, 5);
  expected(2, 3) = 1;
  expected(3, 4) = 1;
  expected(4, 1) = 1;
  Tally staircase;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix T = staircase_family_5x5(rng);
    const DeltaShift d = find_delta_any_rank(T);
    staircase.record(d.delta == expected && !exact_det(T - to_complex(d.delta)).is_zero(),
                 [&] { return Json{{"T", write_matrix(T)}, {"delta", write_matrix(d.delta)}}; });
  }
  rep.checks.push_back(staircase.check("delta.staircase_pattern",
                                   "delta == e34 + e45 + e52 && det(T - delta) != 0",
                                   Json{{"expected", write_matrix(expected)}}));

  const DeltaShift d5 = find_delta(section5_T());
  IntMatrix diag01(2, 2);
  diag01(1, 1) = 1;
  rep.checks.push_back(exact_check(
      "delta.worked_example", "delta == diag(0,1) && det(T - delta) == -i && rank T == 1",
      d5.delta == diag01 && d5.det_shifted == QComplex(Rational(0), Rational(-1)) && d5.rank == 1,
      Json::array({Json{{"delta", write_matrix(d5.delta)}, {"det", write_complex(d5.det_shifted)}}})));

  Tally nonsingular;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 4;
    ComplexMatrix T;
    do {
      T = random_pd_period(rng, n);
    } while (exact_det(T).is_zero());
    nonsingular.record(find_delta(T).delta.is_zero(), [&] { return write_matrix(T); });
  }
  rep.checks.push_back(nonsingular.check("delta.nonsingular_zero", "det T != 0 => delta == 0"));
  return rep;
}

Report suite_rank(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  Tally snf, index;
  auto check_A = [&](const IntMatrix& A) {
    const SmithDecomposition s = smith_normal_form(A);
    const std::size_t n = A.rows();
    bool ok = s.left * A * s.right == s.diagonal(n, n) && abs(exact_det(s.left)) == 1 &&
              abs(exact_det(s.right)) == 1;
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      const Integer& a = s.divisors[i];
      const Integer& b = s.divisors[i + 1];
      if (a < 0 || (a == 0 && b != 0) || (a != 0 && b % a != 0)) ok = false;
    }
    snf.record(ok, [&] { return write_matrix(A); });
    for (long r = 1; r <= 6; ++r) {
      const Integer rp = compute_rank(Integer(r), A).rprime;
      index.record(rp == lattice_index_rank(Integer(r), A),
                   [&] { return Json{{"r", r}, {"A", write_matrix(A)}, {"rprime", write_integer(rp)}}; });
    }
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::size_t cells = n * n;
    std::vector<long> digits(cells, -6);
    for (;;) {
      IntMatrix A(n, n);
      for (std::size_t c = 0; c < cells; ++c) A(c / n, c % n) = digits[c];
      check_A(A);
      std::size_t c = cells;
      while (c-- > 0) {
        if (++digits[c] <= 6) break;
        digits[c] = -6;
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
  }
  constexpr int kSampled = 2000;
  for (int k = 0; k < kSampled; ++k) check_A(random_int_matrix(rng, 3, 3, 6));
  const Json coverage{{"exhaustive", "n <= 2, |a_ij| <= 6, r <= 6"},
                      {"sampled", "n = 3, |a_ij| <= 6, r <= 6, 2000 matrices"}};
  rep.checks.push_back(snf.check(
      "rank.snf_invariants",
      "left A right == diag(d) && |det left| == |det right| == 1 && d_i | d_(i+1)", coverage));
  rep.checks.push_back(
      index.check("rank.lattice_index", "r' == [Z^n + (A/r) Z^n : Z^n]", coverage));

  const SmithDecomposition s1 = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  const SmithDecomposition s2 = smith_normal_form(section5_A1());
  const bool ex = s1.divisors == std::vector<Integer>{2, 4} && s2.divisors == std::vector<Integer>{1, 1} &&
                  compute_rank(2, section5_A1()).rprime == 4 && compute_rank(1, section5_A1()).rprime == 1 &&
                  compute_rank(1, zero_matrix(2)).rprime == 1;
  rep.checks.push_back(exact_check(
      "rank.examples",
      "SNF[[2,4],[6,8]] == (2,4) && SNF(A1) == (1,1) && r'(2,A1) == 4 && r'(1,A1) == 1 && r'(1,0) == 1",
      ex));
  return rep;
}

Report suite_holomorphic(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  Tally equiv, pullback02, conn, biholo;
  std::size_t holomorphic_count = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 3;
    ComplexMatrix T;
    IntMatrix delta;
    switch (i % 3) {
      case 0:
        T = random_pd_period(rng, n);
        delta = random_shift(rng, T);
        break;
      case 1:
        T = random_singular_pd(rng, n, n - 1);
        delta = find_delta(T).delta;
        break;
      default:
        T = random_singular_pd(rng, n, (n + 1) / 2);
        delta = find_delta(T).delta;
        break;
    }
    const Biholomorphism phi = biholomorphism(T, delta);
    biholo.record(check_biholomorphism(phi).ok(), [&] { return write_matrix(T); });
    const IntMatrix A = (i / 3) % 2 == 0 ? random_admissible(rng, phi.Tprime)
                                          : random_int_matrix(rng, n, n, 2);
    const bool a = is_holomorphic(A, phi.Tprime);
    const bool b = holomorphic_conditions(A, T, delta).both();
    const bool c = antisymmetric_part_times_two(curvature_02_part(A, phi.Tprime)).is_zero();
    holomorphic_count += a;
    auto witness = [&] {
      return Json{{"T", write_matrix(T)}, {"delta", write_matrix(delta)}, {"A", write_matrix(A)},
                  {"AT'_symmetric", a}, {"split_conditions", b}, {"curvature_02_zero", c}};
    };
    equiv.record(a == b && b == c, witness);

    const Integer r = a ? Integer(1 + i % 3) : Integer(1);
    const BundleSpec spec = make_bundle_spec(r, A, phi.Tprime, RationalVector(n), RationalVector(n));
    const ConnectionData cd = pullback_connection(spec, phi);
    pullback02.record(cd.z02_times_2pi.is_zero() == a, witness);
    if (a)
      conn.record(cd.chain_rule_ok && cd.z11_times_2pi == cd.z11_expected_times_2pi &&
                      cd.z20_times_2pi.is_zero(),
                  witness);
  }
  rep.checks.push_back(equiv.check(
      "holomorphic.equivalence",
      "[A T' == (A T')^t] <=> [(Im T)^t A sym && A^t Re(T - delta) sym] <=> [Alt(curvature (0,2)) == 0]",
      Json{{"holomorphic_instances", holomorphic_count}}));
  rep.checks.push_back(pullback02.check(
      "holomorphic.pullback_curvature_02",
      "[A T' == (A T')^t] <=> pulled-back curvature has no dz-bar dz-bar part"));
  rep.checks.push_back(conn.check(
      "holomorphic.projectively_flat",
      "curvature == dz^t (i/r)((T - conj T)^-1)^t A^t dz-bar, chain rule through phi"));
  rep.checks.push_back(biholo.check("holomorphic.biholomorphism",
                                    "T'(-T + delta) == I && det[[0,-I],[I,delta]] == 1 && "
                                    "T' T == -I + T' delta && Moebius form == T'"));

  const TorusInput s5 = section5_torus();
  const Biholomorphism phi = biholomorphism(s5.T, *s5.delta);
  const QComplex i = QComplex::i();
  const ComplexMatrix expected{{QComplex(1) + i, i}, {-i, QComplex(1)}};
  auto sym_T = [&](const IntMatrix& A) { return (to_complex(A) * s5.T).is_symmetric(); };
  const bool ok = phi.Tprime == expected && is_holomorphic(section5_A1(), phi.Tprime) &&
                  !sym_T(section5_A1()) && sym_T(section5_A2()) &&
                  !is_holomorphic(section5_A2(), phi.Tprime);
  rep.checks.push_back(exact_check(
      "holomorphic.worked_example",
      "T' == [[1+i,i],[-i,1]] && A1 T' sym && !(A1 T sym) && A2 T sym && !(A2 T' sym)", ok,
      Json::array({Json{{"Tprime", write_matrix(phi.Tprime)}}})));
  return rep;
}

Report suite_fukaya(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  const TorusInput s5 = section5_torus();
  const Biholomorphism phi = biholomorphism(s5.T, *s5.delta);

  const InjectivityResult inj = injectivity_check(s5.T, *s5.delta, cfg.bound);
  const Json counts{{"bound", cfg.bound},
                    {"bundles", inj.bundles},
                    {"objects", inj.objects},
                    {"distinct_keys", inj.distinct_keys}};
  rep.checks.push_back(exact_check("fukaya.mirror_objects_pass",
                                   "(f1) && (f2) for every mirror object", inj.fukaya_failures == 0 && inj.objects > 0,
                                   inj.fukaya_failures ? inj.witnesses : Json::array(), counts));
  rep.checks.push_back(exact_check("fukaya.injective",
                                   "key(a) == key(b) => complex data of a == complex data of b",
                                   inj.collisions == 0, inj.collisions ? inj.witnesses : Json::array(),
                                   counts));
  rep.checks.push_back(exact_check("fukaya.cocycle_relations",
                                   "unitary sets and their pullbacks satisfy their relations",
                                   inj.cocycle_failures == 0, Json::array(), counts));

  // (f1) && (f2) <=> A T' symmetric, over every A in the box.
  Tally consistent;
  const int b = std::max(cfg.bound, 1);
  std::vector<long> digits(4, -b);
  for (;;) {
    IntMatrix A(2, 2);
    for (std::size_t c = 0; c < 4; ++c) A(c / 2, c % 2) = digits[c];
    for (Side side : {Side::CheckTprime, Side::CheckT})
      consistent.record(check_fukaya_object(1, A, side, phi).consistent(), [&] {
        return Json{{"A", write_matrix(A)}, {"side", side_name(side)}};
      });
    std::size_t c = 4;
    while (c-- > 0) {
      if (++digits[c] <= b) break;
      digits[c] = -b;
    }
    if (c == static_cast<std::size_t>(-1)) break;
  }
  rep.checks.push_back(consistent.check("fukaya.condition_equivalence",
                                        "(f1) && (f2) <=> A T' == (A T')^t"));

  // The key is blind to the lattice translations of the multi-section.
  Tally invariance;
  for (int k = 0; k < 40; ++k) {
    IntMatrix A;
    do {
      A = random_admissible(rng, phi.Tprime, 1);
    } while (A.is_zero());
    const Integer r = 1 + k % 3;
    FukayaObject obj;
    obj.lagrangian = {k % 2 ? Side::CheckT : Side::CheckTprime, r, A, {}};
    for (std::size_t i = 0; i < 2; ++i) {
      obj.lagrangian.p.push_back({rng.small_rational(), rng.small_rational()});
      obj.q.push_back({rng.small_rational(), rng.small_rational()});
    }
    const CanonicalKey key = canonical_form(obj);
    const std::size_t i = k % 2;
    FukayaObject by_r = obj, by_a = obj, by_q = obj;
    by_r.lagrangian.p[i].turns += Rational(r);
    for (std::size_t j = 0; j < 2; ++j) by_a.lagrangian.p[j].turns -= Rational(A(j, i));
    by_q.q[i].turns += Rational(r);
    invariance.record(canonical_form(by_r) == key && canonical_form(by_a) == key &&
                          canonical_form(by_q) == key,
                      [&] { return key.to_string(); });
  }
  rep.checks.push_back(invariance.check(
      "fukaya.key_invariance", "key(p + 2 pi r e_i) == key(p + 2 pi A e_i) == key(q + 2 pi r e_i) == key"));

  bool rejected = false;
  try {
    mirror_object(make_bundle_spec(1, section5_A2(), phi.Tprime, RationalVector(2), RationalVector(2)),
                  Side::CheckTprime);
  } catch (const NotHolomorphic&) {
    rejected = true;
  }
  rep.checks.push_back(exact_check("fukaya.non_holomorphic_rejected",
                                   "A2 T' not symmetric => mirror_object raises NotHolomorphic",
                                   rejected));
  return rep;
}

Report suite_pairings(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  Tally forms, gg, gpgp, ggp, gpg, aux;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    const ComplexMatrix T = random_pd_period(rng, n);
    const IntMatrix delta = random_shift(rng, T);
    const Biholomorphism phi = biholomorphism(T, delta);
    IntMatrix A;
    for (int attempt = 0; attempt < 10 && A.is_zero(); ++attempt) A = random_admissible(rng, phi.Tprime);
    const Integer r = rng.uniform_int(1, 3);
    const CurvatureFactor cf = curvature_factor(r, A, phi);
    const PairingTable pt = im_pairings(cf, phi, A);
    auto witness = [&] {
      return Json{{"T", write_matrix(T)}, {"delta", write_matrix(delta)}, {"A", write_matrix(A)},
                  {"r", write_integer(r)}};
    };
    forms.record(cf.forms_agree && cf.symmetric, witness);
    gg.record(pt.gg == pt.gg_expected, witness);
    gpgp.record(pt.gpgp == pt.gpgp_expected, witness);
    ggp.record(pt.ggp == pt.ggp_expected, witness);
    gpg.record(pt.gpg == pt.gpg_expected, witness);
    aux.record(pt.aux_R_conjT && pt.aux_R_T, witness);
  }
  rep.checks.push_back(forms.check("pairings.curvature_factor",
                                   "R real symmetric && (r'/r)((Im T)^-1)^t A^t == 2i(r'/r)((T - conj T)^-1)^t A^t"));
  rep.checks.push_back(gg.check("pairings.gamma_gamma", "Im R(gamma_j, gamma_k) == 0"));
  rep.checks.push_back(gpgp.check("pairings.gammaP_gammaP",
                                  "Im R(gamma'_j, gamma'_k) == pi (r'/r)(A^t delta - delta^t A)_jk"));
  rep.checks.push_back(ggp.check("pairings.gamma_gammaP", "Im R(gamma_j, gamma'_k) == -pi (r'/r) a_jk"));
  rep.checks.push_back(gpg.check("pairings.gammaP_gamma", "Im R(gamma'_j, gamma_k) == pi (r'/r) a_kj"));
  rep.checks.push_back(aux.check("pairings.auxiliary",
                                 "Im(R conj T) == -(1/4pi)(r'/r) A && Im(conj(R) T) == (1/4pi)(r'/r) A"));

  const TorusInput s5 = section5_torus();
  const Biholomorphism phi = biholomorphism(s5.T, *s5.delta);
  const CurvatureFactor cf = curvature_factor(1, section5_A1(), phi);
  const PairingTable pt = im_pairings(cf, phi, section5_A1());
  rep.checks.push_back(exact_check(
      "pairings.worked_example", "4 pi R == A1^t && Im R(gamma_1, gamma'_2) == -pi",
      cf.R_times_4pi == to_rational(section5_A1()).transpose() && pt.ggp(0, 1) == -1,
      Json::array({Json{{"R_times_4pi", write_matrix(cf.R_times_4pi)},
                        {"im_gamma1_gammaP2_over_pi", write_rational(pt.ggp(0, 1))}}})));
  return rep;
}

struct AutomorphyCase {
  std::string name;
  ComplexMatrix T;
  IntMatrix delta;
  Integer r;
  IntMatrix A;
  RationalVector p, q;
};

Report suite_automorphy(const VerifyConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  const TorusInput s5 = section5_torus();
  auto random_vec = [&](std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = rng.small_rational(3, 4);
    return v;
  };
  std::vector<AutomorphyCase> cases;
  cases.push_back({"r1_A1_mu0", s5.T, *s5.delta, 1, section5_A1(), RationalVector(2), RationalVector(2)});
  cases.push_back({"r1_A1_mu", s5.T, *s5.delta, 1, section5_A1(), random_vec(2), random_vec(2)});
  cases.push_back({"r2_A1_mu", s5.T, *s5.delta, 2, section5_A1(), random_vec(2), random_vec(2)});
  {
    const QComplex i = QComplex::i();
    const ComplexMatrix T{{QComplex(2) * i, QComplex(2)}, {QComplex(-2), QComplex(2) * i}};
    cases.push_back({"r2_rank2", T, *s5.delta, 2, IntMatrix{{1, 2}, {2, 0}}, random_vec(2), random_vec(2)});
  }
  cases.push_back({"zero", s5.T, *s5.delta, 1, zero_matrix(2), RationalVector(2), RationalVector(2)});
  for (int k = 0; k < 4; ++k) {
    const std::size_t n = 2 + k % 2;
    for (;;) {
      const ComplexMatrix T = random_pd_period(rng, n);
      const IntMatrix delta = random_shift(rng, T);
      const Biholomorphism phi = biholomorphism(T, delta);
      const IntMatrix A = random_admissible(rng, phi.Tprime, 1);
      const Integer r = rng.uniform_int(1, 3);
      if (A.is_zero() || max_abs_entry(A) > kMaxAutomorphyEntry || compute_rank(r, A).rprime > 64)
        continue;
      cases.push_back({"random_" + std::to_string(k), T, delta, r, A, random_vec(n), random_vec(n)});
      break;
    }
  }

  IntertwiningOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.unitary_tol = kUnitaryTol;
  Json table = Json::array();
  for (const auto& c : cases) {
    const Biholomorphism phi = biholomorphism(c.T, c.delta);
    const BundleSpec spec = make_bundle_spec(c.r, c.A, phi.Tprime, c.p, c.q);
    const CurvatureFactor cf = curvature_factor(c.r, c.A, phi);
    const GaugeTransform g = gauge_transform(spec, phi, cf);
    const IntertwiningReport ir = verify_intertwining(spec, phi, opts);
    const std::string base = "automorphy." + c.name;
    const Json details{{"n", spec.n()},
                       {"r", write_integer(c.r)},
                       {"rprime", write_integer(cf.rprime)},
                       {"samples", ir.samples},
                       {"T", write_matrix(c.T)},
                       {"delta", write_matrix(c.delta)},
                       {"A", write_matrix(c.A)},
                       {"mu", write_vector(spec.mu())}};
    rep.checks.push_back(exact_check(base + ".calA",
                                     "CalA == CalA^t && conj(CalA) - CalA == (2 pi / i) R",
                                     g.calA_symmetric && g.calA_relation, Json::array(), details));
    rep.checks.push_back(numeric_check(
        base + ".intertwining", "|Psi(z+g) e_g(z) Psi(z)^-1 - j(g,z)|_F / |j(g,z)|_F <= tol",
        ir.max_residual, cfg.tol,
        Json::array({Json{{"worst_sample", ir.worst_sample}, {"generator", ir.worst_generator}}})));
    rep.checks.push_back(exact_check(base + ".phases_unitary",
                                     "exponents of the U(gamma) phases are purely imaginary",
                                     ir.phases_exact_unitary));
    rep.checks.push_back(numeric_check(base + ".unitarity", "max |U(g) U(g)^* - I| <= 1e-12",
                                       ir.max_unitarity_defect, kUnitaryTol));
    rep.checks.push_back(exact_check(
        base + ".cocycle_relations",
        "V', U' relations exact && U(g)U(l) == exp(2i Im R(g,l)/r') U(l)U(g) in root-of-unity arithmetic",
        ir.cocycle_exact));
    rep.checks.push_back(numeric_check(base + ".cocycle_identity",
                                       "j(g, z+l) j(l, z) == j(l, z+g) j(g, z)",
                                       ir.max_cocycle_residual, cfg.tol));
    if (c.A.is_zero()) {
      bool trivial = g.CalA.is_zero();
      for (const auto& m : g.mu) trivial = trivial && m.is_zero();
      rep.checks.push_back(exact_check(base + ".psi_trivial", "A == 0 && mu == 0 => Psi == 1",
                                       trivial));
    }
    table.push_back(Json{{"case", c.name},
                         {"rprime", write_integer(cf.rprime)},
                         {"intertwining", ir.max_residual},
                         {"unitarity", ir.max_unitarity_defect},
                         {"cocycle_identity", ir.max_cocycle_residual}});
  }
  rep.result["residual_table"] = table;
  return rep;
}

Report suite_sets(const VerifyConfig& cfg) {
  Report rep;
  const TorusInput s5 = section5_torus();
  const SetClassification sc = classify_sets(s5.T, *s5.delta, cfg.bound);
  auto find = [&](const IntMatrix& A) -> const SetEntry* {
    for (const auto& e : sc.entries)
      if (e.A == A) return &e;
    return nullptr;
  };
  const Json counts{{"bound", cfg.bound},
                    {"total", sc.entries.size()},
                    {"delta", sc.delta_count},
                    {"syz", sc.syz_count},
                    {"both", sc.both_count}};
  Json w_delta = Json::array(), w_syz = Json::array();
  for (const auto& A : sc.delta_only) add_witness(w_delta, write_matrix(A));
  for (const auto& A : sc.syz_only) add_witness(w_syz, write_matrix(A));

  const SetEntry* zero = find(zero_matrix(2));
  rep.checks.push_back(exact_check("sets.zero_in_both", "A == 0 lies in E_delta and E_SYZ",
                                   zero && zero->in_delta && zero->in_syz, Json::array(), counts));
  if (cfg.bound >= 1) {
    const SetEntry* a1 = find(section5_A1());
    const SetEntry* a2 = find(section5_A2());
    rep.checks.push_back(exact_check("sets.A1_delta_only", "A1 T' sym && !(A1 T sym)",
                                     a1 && a1->in_delta && !a1->in_syz));
    rep.checks.push_back(exact_check("sets.A2_syz_only", "A2 T sym && !(A2 T' sym)",
                                     a2 && a2->in_syz && !a2->in_delta));
    rep.checks.push_back(exact_check("sets.differ", "E_delta \\ E_SYZ != {} && E_SYZ \\ E_delta != {}",
                                     !sc.delta_only.empty() && !sc.syz_only.empty(),
                                     Json::array({Json{{"delta_only", w_delta}, {"syz_only", w_syz}}}),
                                     counts));
  }
  return rep;
}

using SuiteFn = Report (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"gcs", suite_gcs},           {"mirror-relations", suite_mirror_relations},
      {"delta", suite_delta},       {"rank", suite_rank},
      {"holomorphic", suite_holomorphic}, {"fukaya", suite_fukaya},
      {"pairings", suite_pairings}, {"automorphy", suite_automorphy},
      {"sets", suite_sets}};
  return table;
}

IntMatrix delta_or_find(const TorusInput& in) {
  return in.delta ? *in.delta : find_delta(in.T).delta;
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  out["config"] = config;
  out["result"] = result;
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["predicate"] = c.predicate;
    j["status"] = c.pass ? "pass" : "fail";
    j["kind"] = c.kind == CheckKind::Exact ? "exact" : "numeric";
    if (c.kind == CheckKind::Numeric) {
      j["residual"] = c.residual;
      j["tol"] = c.tol;
    }
    j["witnesses"] = c.witnesses;
    j["details"] = c.details;
    list.push_back(std::move(j));
    failed += !c.pass;
  }
  out["checks"] = std::move(list);
  out["summary"] = Json{{"checks", checks.size()}, {"failed", failed}};
  out["pass"] = pass();
  return out;
}

Json config_json(const VerifyConfig& cfg) {
  return Json{{"seed", cfg.seed},
              {"samples", cfg.samples},
              {"tol", cfg.tol},
              {"bound", cfg.bound},
              {"mode", mode_name(cfg.mode)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& suite, const VerifyConfig& cfg) {
  Report rep;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) {
      Report part = fn(cfg);
      for (auto& c : part.checks) rep.checks.push_back(std::move(c));
      if (!part.result.empty()) rep.result[name] = std::move(part.result);
    }
  } else {
    bool found = false;
    for (const auto& [name, fn] : suites())
      if (name == suite) {
        rep = fn(cfg);
        found = true;
      }
    if (!found) {
      std::string known;
      for (const auto& n : suite_names()) known += n + ", ";
      throw UnknownSuite("unknown suite '" + suite + "' (expected one of " + known + "all)");
    }
  }
  rep.command = "verify " + suite;
  rep.config = config_json(cfg);
  rep.config["suite"] = suite;
  return rep;
}

TorusInput section5_torus() {
  IntMatrix d(2, 2);
  d(1, 1) = 1;
  return {section5_T(), d};
}

Integer lattice_index_rank(const Integer& r, const IntMatrix& A) {
  const std::size_t n = A.rows();
  IntMatrix gens(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = r;
  gens.set_block(0, n, A);
  const IntMatrix H = lower_hermite_basis(gens);
  Integer det = 1, rn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    det *= abs(H(i, i));
    rn *= r;
  }
  if (rn % det != 0) throw std::logic_error("lattice index is not integral");
  return rn / det;
}

InjectivityResult injectivity_check(const ComplexMatrix& T, const IntMatrix& delta, int bound) {
  InjectivityResult out;
  const Biholomorphism phi = biholomorphism(T, delta);
  const SetClassification sc = classify_sets(T, delta, bound);
  const std::size_t n = T.rows();
  std::map<std::string, std::string> seen;
  for (long r = 1; r <= 2; ++r)
    for (const auto& e : sc.entries) {
      if (!e.in_delta) continue;
      const BundleSpec spec = make_bundle_spec(r, e.A, phi.Tprime, RationalVector(n), RationalVector(n));
      ++out.bundles;
      if (!verify_unitary_set(spec.unitaries, e.A).ok() ||
          !verify_pullback_unitaries(pullback_unitaries(spec.unitaries, delta), r, e.A, delta).ok())
        ++out.cocycle_failures;
      RationalMatrix slope = to_rational(e.A);
      slope *= Rational(1, r);
      RationalVector mu_over_r(2 * n);  // Re and Im of mu / r; mu == 0 here
      for (unsigned mask = 0; mask < (1U << (2 * n)); ++mask) {
        const auto V = twisted(spec.unitaries.V, mask & ((1U << n) - 1));
        const auto U = twisted(spec.unitaries.U, mask >> n);
        const DetPhases ph = det_phases(V, U);
        std::ostringstream data;
        data << "slope=" << slope << "|mu/r=" << join(mu_over_r) << "|xi=" << join(ph.xi_turns)
             << "|theta=" << join(ph.theta_turns);
        for (Side side : {Side::CheckTprime, Side::CheckT}) {
          const MirrorImage img = mirror_object(spec, side, V, U);
          ++out.objects;
          const std::string key = canonical_form(img.object).to_string();
          if (!check_fukaya_object(img.object, phi).ok()) {
            ++out.fukaya_failures;
            add_witness(out.witnesses, Json{{"failing_object", key}});
          }
          const auto [it, inserted] = seen.emplace(key, data.str());
          if (!inserted && it->second != data.str()) {
            ++out.collisions;
            add_witness(out.witnesses, Json{{"key", key}, {"a", it->second}, {"b", data.str()}});
          }
        }
      }
    }
  out.distinct_keys = seen.size();
  return out;
}

// ---------------------------------------------------------------- commands

Report find_delta_report(const TorusInput& in, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "find-delta";
  rep.config = config_json(cfg);
  const DeltaShift d = find_delta(in.T);
  const std::size_t n = in.T.rows();
  Json rows = Json::array(), cols = Json::array();
  for (auto r : d.basis_rows) rows.push_back(r);
  for (auto c : d.minor_cols) cols.push_back(c);
  rep.result = Json{{"delta", write_matrix(d.delta)},
                    {"rank", d.rank},
                    {"basis_rows", rows},
                    {"minor_cols", cols},
                    {"det_T_minus_delta", write_complex(d.det_shifted, cfg.mode)}};
  bool zero_one = false;
  const std::size_t ones = count_ones(d.delta, zero_one);
  rep.checks.push_back(exact_check("delta.det_nonzero", "det(T - delta) != 0",
                                   !exact_det(in.T - to_complex(d.delta)).is_zero()));
  rep.checks.push_back(exact_check("delta.unit_count", "delta in {0,1} && #ones == n - rank T",
                                   zero_one && ones == n - exact_rank(in.T)));
  return rep;
}

Report mirror_report(const TorusInput& in, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "mirror";
  rep.config = config_json(cfg);
  const IntMatrix delta = delta_or_find(in);
  const QComplex det = exact_det(in.T - to_complex(delta));
  rep.checks.push_back(exact_check("mirror.det_nonzero", "det(T - delta) != 0", !det.is_zero()));
  rep.result["delta"] = write_matrix(delta);
  if (det.is_zero()) return rep;
  const ComplexifiedSymplecticTorus tau = mirror_partner(in.T, delta);
  const Biholomorphism phi = biholomorphism(in.T, delta);
  rep.result["tau"] = write_matrix(tau.tau, cfg.mode);
  rep.result["B"] = write_matrix(real_part(tau.tau), cfg.mode);
  rep.result["omega"] = write_matrix(imag_part(tau.tau), cfg.mode);
  rep.result["Tprime"] = write_matrix(phi.Tprime, cfg.mode);
  rep.result["real_matrix"] = write_matrix(phi.real_matrix);

  const BiholomorphismCheck bc = check_biholomorphism(phi);
  rep.checks.push_back(exact_check("mirror.inverse", "T'(-T + delta) == I", bc.inverse_exact));
  rep.checks.push_back(exact_check("mirror.real_det", "det [[0,-I],[I,delta]] == 1", bc.real_det_one));
  rep.checks.push_back(exact_check("mirror.lattice", "T' T e_k == -e_k + T' delta e_k",
                                   bc.lattice_generators));
  rep.checks.push_back(exact_check("mirror.moebius", "(T C + A)^-1 (T D + B) == T' for [[delta,I],[-I,0]]",
                                   bc.mobius));
  rep.checks.push_back(exact_check("mirror.tprime_mirror", "-(T'^-1)^t == (T - delta)^t",
                                   -exact_inverse(phi.Tprime).transpose() == tau.tau.transpose()));
  const RationalMatrix re = real_part(in.T), im = imag_part(in.T);
  bool shift_ok = false;
  try {
    shift_ok = delta_shift_transform(gcs_from_complexified_symplectic(re, im), delta).M ==
               gcs_from_complexified_symplectic(re - to_rational(delta), im).M;
  } catch (const SingularOmega&) {
  }
  rep.checks.push_back(exact_check("mirror.delta_shift",
                                   "[[I,0],[D,I]] I_ImT(ReT) [[I,0],[-D,I]] == I_ImT(ReT - delta)",
                                   shift_ok));
  return rep;
}

Report check_bundle_report(const BundleInput& in, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "check-bundle";
  rep.config = config_json(cfg);
  const ComplexMatrix& T = in.torus.T;
  const std::size_t n = T.rows();
  const IntMatrix delta = delta_or_find(in.torus);
  const Biholomorphism phi = biholomorphism(T, delta);
  RationalVector p(n), q(n);
  if (in.mu) {
    std::tie(p, q) = split_mu(*in.mu, phi.Tprime);
  } else {
    if (in.p) p = *in.p;
    if (in.q) q = *in.q;
  }
  const BundleSpec spec = make_bundle_spec(in.r, in.A, phi.Tprime, p, q);
  const bool holo = is_holomorphic(in.A, phi.Tprime);
  rep.result = Json{{"delta", write_matrix(delta)},
                    {"Tprime", write_matrix(phi.Tprime, cfg.mode)},
                    {"rank", rank_json(spec.rank())},
                    {"p", write_vector(p, cfg.mode)},
                    {"q", write_vector(q, cfg.mode)},
                    {"mu", write_vector(spec.mu(), cfg.mode)},
                    {"holomorphic", holo}};

  rep.checks.push_back(exact_check("bundle.holomorphic", "A T' == (A T')^t", holo));
  rep.checks.push_back(exact_check(
      "bundle.condition_split", "[A T' sym] <=> [(Im T)^t A sym && A^t Re(T - delta) sym]",
      holo == holomorphic_conditions(in.A, T, delta).both()));
  rep.checks.push_back(exact_check("bundle.rank_index", "r' == [Z^n + (A/r) Z^n : Z^n]",
                                   spec.rank().rprime == lattice_index_rank(in.r, in.A)));
  const CocycleCheck uc = verify_unitary_set(spec.unitaries, in.A);
  rep.checks.push_back(exact_check("bundle.unitary_relations",
                                   "V_j V_k == V_k V_j && U_j U_k == U_k U_j && "
                                   "zeta^-a_kj U_k V_j == V_j U_k",
                                   uc.ok(), Json::array(), cocycle_json(uc)));
  const PullbackUnitaries pb = pullback_unitaries(spec.unitaries, delta);
  const CocycleCheck pc = verify_pullback_unitaries(pb, in.r, in.A, delta);
  rep.checks.push_back(exact_check("bundle.pullback_relations",
                                   "V' commute && U'_j U'_k == zeta^((A^t d)_jk - (A^t d)_kj) U'_k U'_j "
                                   "&& zeta^-a_jk U'_k V'_j == V'_j U'_k",
                                   pc.ok(), Json::array(), cocycle_json(pc)));
  const ConnectionData cd = pullback_connection(spec, phi);
  rep.checks.push_back(exact_check("bundle.chain_rule", "J^t K_XY J == K_xy", cd.chain_rule_ok));
  rep.checks.push_back(exact_check("bundle.curvature_02", "pulled-back curvature has no dz-bar dz-bar part",
                                   cd.z02_times_2pi.is_zero()));
  if (!holo) return rep;
  rep.checks.push_back(exact_check("bundle.curvature_11",
                                   "(1,1) curvature == (i/r)((T - conj T)^-1)^t A^t",
                                   cd.z11_times_2pi == cd.z11_expected_times_2pi));
  const MirrorImage img = mirror_object(spec, in.side);
  const FukayaCheck fc = check_fukaya_object(img.object, phi);
  Json pth = Json::array(), qxi = Json::array();
  for (const auto& v : img.p_theta) pth.push_back(write_phase(v));
  for (const auto& v : img.q_xi) qxi.push_back(write_phase(v));
  rep.result["mirror"] = Json{{"side", side_name(in.side)},
                              {"r", write_integer(in.r)},
                              {"A", write_matrix(in.A)},
                              {"xi_turns", write_vector(img.phases.xi_turns)},
                              {"theta_turns", write_vector(img.phases.theta_turns)},
                              {"p_theta", pth},
                              {"q_xi", qxi},
                              {"key", canonical_form(img.object).to_string()}};
  rep.checks.push_back(exact_check("bundle.mirror_f1", "Lagrangian condition (f1)", fc.f1));
  rep.checks.push_back(exact_check("bundle.mirror_f2", "curvature == restricted B-field (f2)", fc.f2));
  return rep;
}

Report build_unitaries_report(const UnitaryInput& in, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "build-unitaries";
  rep.config = config_json(cfg);
  const UnitarySet set = build_unitary_set(in.r, in.A);
  Json V = Json::array(), U = Json::array();
  for (const auto& v : set.V) V.push_back(write_monomial(v));
  for (const auto& u : set.U) U.push_back(write_monomial(u));
  const DetPhases ph = det_phases(set.V, set.U);
  rep.result = Json{{"rank", rank_json(set.rank)},
                    {"V", V},
                    {"U", U},
                    {"xi_turns", write_vector(ph.xi_turns)},
                    {"theta_turns", write_vector(ph.theta_turns)}};
  const CocycleCheck uc = verify_unitary_set(set, in.A);
  rep.checks.push_back(exact_check("unitaries.relations",
                                   "V_j V_k == V_k V_j && U_j U_k == U_k U_j && "
                                   "zeta^-a_kj U_k V_j == V_j U_k",
                                   uc.ok(), Json::array(), cocycle_json(uc)));
  if (in.delta) {
    const PullbackUnitaries pb = pullback_unitaries(set, *in.delta);
    Json Vp = Json::array(), Up = Json::array();
    for (const auto& v : pb.V) Vp.push_back(write_monomial(v));
    for (const auto& u : pb.U) Up.push_back(write_monomial(u));
    rep.result["pullback"] = Json{{"V", Vp}, {"U", Up}};
    const CocycleCheck pc = verify_pullback_unitaries(pb, in.r, in.A, *in.delta);
    rep.checks.push_back(exact_check("unitaries.pullback_relations",
                                     "V' commute && U'_j U'_k == zeta^((A^t d)_jk - (A^t d)_kj) U'_k U'_j "
                                     "&& zeta^-a_jk U'_k V'_j == V'_j U'_k",
                                     pc.ok(), Json::array(), cocycle_json(pc)));
  }
  return rep;
}

Report enumerate_report(const TorusInput& in, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "enumerate";
  rep.config = config_json(cfg);
  if (cfg.bound > 2) throw BoundTooLarge("enumerate accepts bound <= 2, got " + std::to_string(cfg.bound));
  const IntMatrix delta = delta_or_find(in);
  const SetClassification sc = classify_sets(in.T, delta, cfg.bound);
  Json table = Json::array();
  for (const auto& e : sc.entries)
    table.push_back(Json{{"A", write_matrix(e.A)}, {"delta", e.in_delta}, {"syz", e.in_syz}});
  Json dw = Json::array(), sw = Json::array();
  for (const auto& A : sc.delta_only) dw.push_back(write_matrix(A));
  for (const auto& A : sc.syz_only) sw.push_back(write_matrix(A));
  rep.result = Json{{"delta", write_matrix(delta)},
                    {"bound", cfg.bound},
                    {"counts", Json{{"total", sc.entries.size()},
                                    {"delta", sc.delta_count},
                                    {"syz", sc.syz_count},
                                    {"both", sc.both_count}}},
                    {"delta_only", dw},
                    {"syz_only", sw},
                    {"table", table}};
  const InjectivityResult inj = injectivity_check(in.T, delta, cfg.bound);
  const Json counts{{"bundles", inj.bundles}, {"objects", inj.objects}, {"distinct_keys", inj.distinct_keys}};
  rep.checks.push_back(exact_check("enumerate.injective",
                                   "key(a) == key(b) => complex data of a == complex data of b",
                                   inj.collisions == 0, inj.collisions ? inj.witnesses : Json::array(), counts));
  rep.checks.push_back(exact_check("enumerate.mirror_objects_pass", "(f1) && (f2) for every mirror object",
                                   inj.fukaya_failures == 0,
                                   inj.fukaya_failures ? inj.witnesses : Json::array(), counts));
  return rep;
}

}  // namespace torus_mirror
