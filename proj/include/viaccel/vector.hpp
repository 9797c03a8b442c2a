#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace viaccel {

// Dense real vector of fixed dimension n >= 1.
//
// Construction from external data rejects NaN/Inf. In-place arithmetic does
// not re-check (the solver loop checks each new iterate with all_finite()).
class Vector {
 public:
  explicit Vector(std::size_t n, double fill = 0.0);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);

  std::size_t size() const noexcept { return data_.size(); }
  double* data() noexcept { return data_.data(); }
  const double* data() const noexcept { return data_.data(); }
  double& operator[](std::size_t i) noexcept { return data_[i]; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }
  const std::vector<double>& values() const noexcept { return data_; }
  std::span<const double> span() const noexcept { return data_; }

  bool all_finite() const noexcept;

  double dot(const Vector& other) const;
  double squared_norm() const;
  double norm() const;

  // this += a * x
  Vector& axpy(double a, const Vector& x);
  Vector& operator+=(const Vector& x);
  Vector& operator-=(const Vector& x);
  Vector& operator*=(double s);

  friend bool operator==(const Vector& a, const Vector& b) = default;

 private:
  std::vector<double> data_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(double s, Vector a);

// ||a - b||^2
double squared_distance(const Vector& a, const Vector& b);
double distance(const Vector& a, const Vector& b);

// out = a x + b y
void linear_combination(double a, const Vector& x, double b, const Vector& y, Vector& out);

// Throws std::invalid_argument naming `what` when the sizes differ.
void require_same_size(const Vector& a, const Vector& b, const char* what);

// Row-major dense matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  double* data() noexcept { return data_.data(); }
  const double* data() const noexcept { return data_.data(); }
  const std::vector<double>& values() const noexcept { return data_; }

  // out = M x (+ shift)
  void multiply(const Vector& x, Vector& out, const Vector* shift = nullptr) const;
  Vector multiply(const Vector& x) const;
  // out = M^T x
  void multiply_transposed(const Vector& x, Vector& out) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

}  // namespace viaccel
