#include "torus_mirror/exact.hpp"

#include <cctype>

namespace torus_mirror {

std::ostream& operator<<(std::ostream& os, const QComplex& z) {
  if (z.is_real()) return os << z.real();
  return os << '(' << z.real() << (sgn(z.imag()) < 0 ? "" : "+") << z.imag() << "i)";
}

RationalMatrix to_rational(const IntMatrix& m) {
  return m.map([](const Integer& v) { return Rational(v); });
}

ComplexMatrix to_complex(const IntMatrix& m) {
  return m.map([](const Integer& v) { return QComplex(v); });
}

ComplexMatrix to_complex(const RationalMatrix& m) {
  return m.map([](const Rational& v) { return QComplex(v); });
}

ComplexMatrix from_parts(const RationalMatrix& re, const RationalMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw std::invalid_argument("from_parts: shape mismatch");
  ComplexMatrix out(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j) out(i, j) = QComplex(re(i, j), im(i, j));
  return out;
}

RationalMatrix real_part(const ComplexMatrix& m) {
  return m.map([](const QComplex& v) { return v.real(); });
}

RationalMatrix imag_part(const ComplexMatrix& m) {
  return m.map([](const QComplex& v) { return v.imag(); });
}

ComplexMatrix conj(const ComplexMatrix& m) {
  return m.map([](const QComplex& v) { return v.conj(); });
}

IntMatrix to_integer(const RationalMatrix& m) {
  return m.map([](const Rational& v) {
    if (v.get_den() != 1) throw std::domain_error("to_integer: non-integral entry");
    return Integer(v.get_num());
  });
}

IntMatrix to_integer(const ComplexMatrix& m) {
  return m.map([](const QComplex& v) {
    if (!v.is_real() || v.real().get_den() != 1)
      throw std::domain_error("to_integer: non-integral entry");
    return Integer(v.real().get_num());
  });
}

ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

ComplexMatrix column_matrix(const ComplexVector& v) {
  ComplexMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t k = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    return true;
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw std::invalid_argument("not a rational: '" + s + "'");
    return Rational(Integer(strip_plus(t)));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("not a rational: '" + s + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace torus_mirror
