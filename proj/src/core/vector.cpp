#include "viaccel/vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "viaccel/kernels.hpp"

namespace viaccel {
namespace {

void check_entries(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("vector dimension must be at least 1");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw std::invalid_argument("vector entry " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::size_t n, double fill) : data_(n, fill) { check_entries(data_); }

Vector::Vector(std::initializer_list<double> values) : data_(values) { check_entries(data_); }

Vector::Vector(std::vector<double> values) : data_(std::move(values)) { check_entries(data_); }

bool Vector::all_finite() const noexcept {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double Vector::dot(const Vector& other) const {
  require_same_size(*this, other, "dot");
  return kernels::active().dot(data(), other.data(), size());
}

double Vector::squared_norm() const { return kernels::active().dot(data(), data(), size()); }

double Vector::norm() const { return std::sqrt(squared_norm()); }

Vector& Vector::axpy(double a, const Vector& x) {
  require_same_size(*this, x, "axpy");
  kernels::active().axpy(a, x.data(), data(), size());
  return *this;
}

Vector& Vector::operator+=(const Vector& x) { return axpy(1.0, x); }

Vector& Vector::operator-=(const Vector& x) { return axpy(-1.0, x); }

Vector& Vector::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(double s, Vector a) { return a *= s; }

double squared_distance(const Vector& a, const Vector& b) {
  require_same_size(a, b, "squared_distance");
  return kernels::active().sq_dist(a.data(), b.data(), a.size());
}

double distance(const Vector& a, const Vector& b) { return std::sqrt(squared_distance(a, b)); }

void linear_combination(double a, const Vector& x, double b, const Vector& y, Vector& out) {
  require_same_size(x, y, "linear_combination");
  require_same_size(x, out, "linear_combination");
  kernels::active().axpby(a, x.data(), b, y.data(), out.data(), x.size());
}

void require_same_size(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) +
                                " entries, expected " + std::to_string(rows * cols));
  }
  for (double x : data_) {
    if (!std::isfinite(x)) throw std::invalid_argument("matrix entry is not finite");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void Matrix::multiply(const Vector& x, Vector& out, const Vector* shift) const {
  if (x.size() != cols_ || out.size() != rows_ || (shift && shift->size() != rows_)) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  if (&x == &out) throw std::invalid_argument("matrix-vector product: output aliases input");
  kernels::active().gemv(data(), rows_, cols_, x.data(), shift ? shift->data() : nullptr,
                         out.data());
}

Vector Matrix::multiply(const Vector& x) const {
  Vector out(rows_);
  multiply(x, out);
  return out;
}

void Matrix::multiply_transposed(const Vector& x, Vector& out) const {
  if (x.size() != rows_ || out.size() != cols_) {
    throw std::invalid_argument("transposed matrix-vector product: dimension mismatch");
  }
  if (&x == &out) throw std::invalid_argument("transposed product: output aliases input");
  kernels::active().gemv_t(data(), rows_, cols_, x.data(), out.data());
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

}  // namespace viaccel
