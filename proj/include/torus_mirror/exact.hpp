#pragma once

// Exact scalars (GMP integers and rationals, Gaussian rationals) and a small
// dense row-major matrix template used for every identity check in the
// library.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace torus_mirror {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Q(i): a pair of exact rationals.
class QComplex {
 public:
  QComplex() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  QComplex(I re) : re_(static_cast<long>(re)) {}
  QComplex(const Integer& re) : re_(re) {}
  QComplex(Rational re) : re_(std::move(re)) {}
  QComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static QComplex i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  QComplex conj() const { return {re_, Rational(-im_)}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  QComplex& operator+=(const QComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  QComplex& operator/=(const QComplex& o) {
    const Rational d = o.norm();
    if (sgn(d) == 0) throw std::domain_error("QComplex: division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const QComplex& z);

namespace detail {
template <class T>
bool is_zero(const T& v) {
  if constexpr (std::is_same_v<T, QComplex>) {
    return v.is_zero();
  } else {
    return sgn(v) == 0;
  }
}
}  // namespace detail

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  template <class F>
  auto map(F f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!detail::is_zero(v)) return false;
    return true;
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<QComplex>;
using RationalVector = std::vector<Rational>;
using ComplexVector = std::vector<QComplex>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// Conversions between the exact matrix flavours.
RationalMatrix to_rational(const IntMatrix& m);
ComplexMatrix to_complex(const IntMatrix& m);
ComplexMatrix to_complex(const RationalMatrix& m);
ComplexMatrix from_parts(const RationalMatrix& re, const RationalMatrix& im);
RationalMatrix real_part(const ComplexMatrix& m);
RationalMatrix imag_part(const ComplexMatrix& m);
ComplexMatrix conj(const ComplexMatrix& m);
/// Throws std::domain_error when an entry is not integral.
IntMatrix to_integer(const RationalMatrix& m);
IntMatrix to_integer(const ComplexMatrix& m);

template <class T>
Matrix<T> antisymmetric_part_times_two(const Matrix<T>& m) {
  return m - m.transpose();
}

ComplexVector mat_vec(const ComplexMatrix& m, const ComplexVector& v);
ComplexMatrix column_matrix(const ComplexVector& v);

/// Parses "p", "p/q" or "-p/q" (optional whitespace) into a canonical rational.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

}  // namespace torus_mirror
