#include "torus_mirror/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "torus_mirror/errors.hpp"

namespace torus_mirror {
namespace {

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

template <class T, class Read>
Matrix<T> read_matrix(const Json& j, const std::string& path, Read read) {
  require_array(j, path);
  if (j.empty()) throw SchemaError(path, "matrix has no rows");
  const std::size_t rows = j.size();
  const std::size_t cols = require_array(j[0], child(path, 0)).size();
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = require_array(j[i], child(path, i));
    if (row.size() != cols)
      throw SchemaError(child(path, i), "row has " + std::to_string(row.size()) + " entries, expected " +
                                            std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = read(row[k], child(child(path, i), k));
  }
  return m;
}

template <class T>
void require_square(const Matrix<T>& m, const std::string& path, std::size_t n = 0) {
  if (!m.is_square()) throw SchemaError(path, "matrix must be square");
  if (n != 0 && m.rows() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " x " + std::to_string(n));
}

}  // namespace

std::string mode_name(NumberMode m) { return m == NumberMode::Exact ? "exact" : "float"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Json load_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  return parse_document(text);
}

const Json& require_member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(path, key), "missing required member");
  return *it;
}

Integer read_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>())
                                                           : Integer(j.get<long>());
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::isfinite(d) && d == std::floor(d)) return Integer(d);
    throw SchemaError(path, "expected an integer");
  }
  if (j.is_string()) {
    try {
      const Rational q = parse_rational(j.get<std::string>());
      if (q.get_den() == 1) return q.get_num();
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError(path, "expected an integer");
}

Rational read_rational(const Json& j, const std::string& path, NumberMode mode) {
  if (j.is_number_integer()) return Rational(read_integer(j, path));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) throw SchemaError(path, "non-finite number");
    if (mode == NumberMode::Exact && d != std::floor(d))
      throw SchemaError(path, "non-integer double in exact mode; write it as a \"p/q\" string");
    return Rational(d);
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a rational");
}

QComplex read_complex(const Json& j, const std::string& path, NumberMode mode) {
  if (j.is_array()) {
    if (j.size() != 2) throw SchemaError(path, "complex scalar must be [re, im]");
    return {read_rational(j[0], child(path, 0), mode), read_rational(j[1], child(path, 1), mode)};
  }
  return QComplex(read_rational(j, path, mode));
}

IntMatrix read_int_matrix(const Json& j, const std::string& path) {
  return read_matrix<Integer>(j, path, [](const Json& e, const std::string& p) {
    return read_integer(e, p);
  });
}

ComplexMatrix read_complex_matrix(const Json& j, const std::string& path, NumberMode mode) {
  return read_matrix<QComplex>(j, path, [mode](const Json& e, const std::string& p) {
    return read_complex(e, p, mode);
  });
}

RationalVector read_rational_vector(const Json& j, const std::string& path, NumberMode mode) {
  require_array(j, path);
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rational(j[i], child(path, i), mode));
  return v;
}

ComplexVector read_complex_vector(const Json& j, const std::string& path, NumberMode mode) {
  require_array(j, path);
  ComplexVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_complex(j[i], child(path, i), mode));
  return v;
}

Json write_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json write_rational(const Rational& q, NumberMode mode) {
  if (mode == NumberMode::Float) return q.get_d();
  if (q.get_den() == 1) return write_integer(q.get_num());
  return format_rational(q);
}

Json write_complex(const QComplex& z, NumberMode mode) {
  return Json::array({write_rational(z.real(), mode), write_rational(z.imag(), mode)});
}

Json write_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_integer(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json write_matrix(const RationalMatrix& m, NumberMode mode) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_rational(m(i, j), mode));
    out.push_back(std::move(row));
  }
  return out;
}

Json write_matrix(const ComplexMatrix& m, NumberMode mode) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_complex(m(i, j), mode));
    out.push_back(std::move(row));
  }
  return out;
}

Json write_vector(const RationalVector& v, NumberMode mode) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(write_rational(x, mode));
  return out;
}

Json write_vector(const ComplexVector& v, NumberMode mode) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(write_complex(x, mode));
  return out;
}

Json write_monomial(const MonomialMatrix& m) {
  Json perm = Json::array();
  for (auto p : m.perm()) perm.push_back(p);
  return Json{{"perm", perm}, {"turns", write_vector(m.turns())}};
}

Json write_phase(const PhaseReal& p) {
  return Json{{"base", write_rational(p.base)}, {"turns", write_rational(p.turns)}};
}

TorusInput read_torus(const Json& doc, NumberMode mode) {
  TorusInput in;
  in.T = read_complex_matrix(require_member(doc, "T", ""), "/T", mode);
  require_square(in.T, "/T");
  if (doc.contains("delta")) {
    in.delta = read_int_matrix(doc["delta"], "/delta");
    require_square(*in.delta, "/delta", in.T.rows());
  }
  return in;
}

BundleInput read_bundle(const Json& doc, NumberMode mode) {
  BundleInput in;
  in.torus = read_torus(doc, mode);
  const std::size_t n = in.torus.T.rows();
  in.r = read_integer(require_member(doc, "r", ""), "/r");
  if (in.r < 1) throw SchemaError("/r", "r must be a positive integer");
  in.A = read_int_matrix(require_member(doc, "A", ""), "/A");
  require_square(in.A, "/A", n);
  auto vec_size = [n](const auto& v, const std::string& path) {
    if (v.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " entries");
  };
  if (doc.contains("p")) {
    in.p = read_rational_vector(doc["p"], "/p", mode);
    vec_size(*in.p, "/p");
  }
  if (doc.contains("q")) {
    in.q = read_rational_vector(doc["q"], "/q", mode);
    vec_size(*in.q, "/q");
  }
  if (doc.contains("mu")) {
    if (in.p || in.q) throw SchemaError("/mu", "give either mu or (p, q), not both");
    in.mu = read_complex_vector(doc["mu"], "/mu", mode);
    vec_size(*in.mu, "/mu");
  }
  if (doc.contains("side")) {
    if (!doc["side"].is_string()) throw SchemaError("/side", "expected a string");
    try {
      in.side = parse_side(doc["side"].get<std::string>());
    } catch (const InputError& e) {
      throw SchemaError("/side", e.what());
    }
  }
  return in;
}

UnitaryInput read_unitary_input(const Json& doc) {
  UnitaryInput in;
  in.r = read_integer(require_member(doc, "r", ""), "/r");
  if (in.r < 1) throw SchemaError("/r", "r must be a positive integer");
  in.A = read_int_matrix(require_member(doc, "A", ""), "/A");
  require_square(in.A, "/A");
  if (doc.contains("delta")) {
    in.delta = read_int_matrix(doc["delta"], "/delta");
    require_square(*in.delta, "/delta", in.A.rows());
  }
  return in;
}

}  // namespace torus_mirror
