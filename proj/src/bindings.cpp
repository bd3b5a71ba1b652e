#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torus_mirror/bundle.hpp"
#include "torus_mirror/errors.hpp"
#include "torus_mirror/json_io.hpp"
#include "torus_mirror/linalg.hpp"
#include "torus_mirror/torus.hpp"
#include "torus_mirror/verify.hpp"

namespace py = pybind11;
using namespace torus_mirror;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

Integer to_integer(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected an integer, got bool");
  if (py::isinstance<py::int_>(h)) return Integer(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) {
    const Rational q = parse_rational(h.cast<std::string>());
    if (q.get_den() == 1) return q.get_num();
  }
  throw py::type_error("expected an integer");
}

// int, str "p/q" and fractions.Fraction are exact; floats are converted from
// their binary value.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(to_integer(h));
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::float_>(h)) return Rational(h.cast<double>());
  if (py::isinstance(h, fraction_type())) {
    Rational q(to_integer(h.attr("numerator")), to_integer(h.attr("denominator")));
    q.canonicalize();
    return q;
  }
  throw py::type_error("expected int, str, float or Fraction");
}

QComplex to_complex_scalar(const py::handle& h) {
  if (PyComplex_Check(h.ptr())) {
    return {Rational(PyComplex_RealAsDouble(h.ptr())), Rational(PyComplex_ImagAsDouble(h.ptr()))};
  }
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    const auto seq = h.cast<py::sequence>();
    if (seq.size() != 2) throw py::value_error("complex scalar must be [re, im]");
    return {to_rational(seq[0]), to_rational(seq[1])};
  }
  return QComplex(to_rational(h));
}

template <class T, class Convert>
Matrix<T> to_matrix(const py::handle& h, Convert convert) {
  const auto rows = h.cast<py::sequence>();
  if (rows.size() == 0) throw py::value_error("matrix has no rows");
  const std::size_t cols = rows[0].cast<py::sequence>().size();
  Matrix<T> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != cols) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = convert(row[j]);
  }
  return m;
}

IntMatrix to_int_matrix(const py::handle& h) { return to_matrix<Integer>(h, to_integer); }

ComplexMatrix to_complex_matrix(const py::handle& h) {
  return to_matrix<QComplex>(h, to_complex_scalar);
}

py::object from_integer(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object from_rational(const Rational& q) {
  return fraction_type()(from_integer(q.get_num()), from_integer(q.get_den()));
}

py::tuple from_complex(const QComplex& z) {
  return py::make_tuple(from_rational(z.real()), from_rational(z.imag()));
}

template <class T, class Convert>
py::list from_matrix(const Matrix<T>& m, Convert convert) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(convert(m(i, j)));
    out.append(row);
  }
  return out;
}

py::list from_int_matrix(const IntMatrix& m) { return from_matrix(m, from_integer); }

py::list from_complex_matrix(const ComplexMatrix& m) { return from_matrix(m, from_complex); }

VerifyConfig make_config(std::uint64_t seed, std::size_t samples, double tol, int bound) {
  if (!(tol > 0)) throw py::value_error("tol must be positive");
  if (bound < 0) throw py::value_error("bound must be non-negative");
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.tol = tol;
  cfg.bound = bound;
  return cfg;
}

std::string dump(const Report& rep) { return rep.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and numeric checks for mirror pairs of tori";

  auto base = py::register_exception<Error>(m, "TorusMirrorError");
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base.ptr());
  py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite", base.ptr());
  py::register_exception<ConditionViolated>(m, "ConditionViolated", base.ptr());
  py::register_exception<ConstructionFailed>(m, "ConstructionFailed", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  m.def(
      "find_delta",
      [](const py::object& T) {
        const DeltaShift d = find_delta(to_complex_matrix(T));
        py::dict out;
        out["delta"] = from_int_matrix(d.delta);
        out["rank"] = d.rank;
        out["det"] = from_complex(d.det_shifted);
        return out;
      },
      py::arg("T"), "Integer {0,1} shift delta with det(T - delta) != 0.");

  m.def(
      "biholomorphism",
      [](const py::object& T, const py::object& delta) {
        const ComplexMatrix t = to_complex_matrix(T);
        const IntMatrix d = delta.is_none() ? find_delta(t).delta : to_int_matrix(delta);
        const Biholomorphism phi = biholomorphism(t, d);
        const ComplexifiedSymplecticTorus tau = mirror_partner(t, d);
        py::dict out;
        out["delta"] = from_int_matrix(d);
        out["Tprime"] = from_complex_matrix(phi.Tprime);
        out["tau"] = from_complex_matrix(tau.tau);
        out["ok"] = check_biholomorphism(phi).ok();
        return out;
      },
      py::arg("T"), py::arg("delta") = py::none(),
      "T' = (delta - T)^-1 and the mirror tau = T - delta.");

  m.def(
      "is_holomorphic",
      [](const py::object& A, const py::object& Tprime) {
        return is_holomorphic(to_int_matrix(A), to_complex_matrix(Tprime));
      },
      py::arg("A"), py::arg("Tprime"), "A T' == (A T')^t.");

  m.def(
      "smith_normal_form",
      [](const py::object& A) {
        const SmithDecomposition s = smith_normal_form(to_int_matrix(A));
        py::dict out;
        py::list div;
        for (const auto& d : s.divisors) div.append(from_integer(d));
        out["divisors"] = div;
        out["left"] = from_int_matrix(s.left);
        out["right"] = from_int_matrix(s.right);
        return out;
      },
      py::arg("A"));

  m.def(
      "bundle_rank",
      [](const py::object& r, const py::object& A) {
        return from_integer(compute_rank(to_integer(r), to_int_matrix(A)).rprime);
      },
      py::arg("r"), py::arg("A"), "r' = prod r / gcd(a_i, r) over the elementary divisors of A.");

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples, double tol, int bound) {
        py::gil_scoped_release release;
        return dump(run_suite(suite, make_config(seed, samples, tol, bound)));
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 50, py::arg("tol") = 1e-8,
      py::arg("bound") = 1, "Runs a verification suite; returns the report as JSON text.");

  m.def(
      "command_report",
      [](const std::string& command, const std::string& input, std::uint64_t seed, std::size_t samples,
         double tol, int bound) {
        const VerifyConfig cfg = make_config(seed, samples, tol, bound);
        const Json doc = input.empty() ? Json() : parse_document(input);
        if (command == "find-delta") return dump(find_delta_report(read_torus(doc, cfg.mode), cfg));
        if (command == "mirror") return dump(mirror_report(read_torus(doc, cfg.mode), cfg));
        if (command == "check-bundle") return dump(check_bundle_report(read_bundle(doc, cfg.mode), cfg));
        if (command == "build-unitaries") return dump(build_unitaries_report(read_unitary_input(doc), cfg));
        if (command == "enumerate")
          return dump(enumerate_report(input.empty() ? section5_torus() : read_torus(doc, cfg.mode), cfg));
        throw InputError("unknown command '" + command + "'");
      },
      py::arg("command"), py::arg("input") = "", py::arg("seed") = 0, py::arg("samples") = 50,
      py::arg("tol") = 1e-8, py::arg("bound") = 1,
      "Runs a CLI command on JSON input text; returns the report as JSON text.");
}
