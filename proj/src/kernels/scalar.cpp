#include <algorithm>

#include "kernels_internal.hpp"

namespace viaccel::kernels {
namespace {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sq_dist(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

void axpby(double a, const double* x, double b, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void gemv(const double* m, std::size_t rows, std::size_t cols, const double* x, const double* shift,
          double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    double s = 0.0;
    for (std::size_t c = 0; c < cols; ++c) s += row[c] * x[c];
    out[r] = shift ? s + shift[r] : s;
  }
}

void gemv_t(const double* m, std::size_t rows, std::size_t cols, const double* x, double* out) {
  std::fill(out, out + cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    const double xr = x[r];
    for (std::size_t c = 0; c < cols; ++c) out[c] += row[c] * xr;
  }
}

void clamp_min(const double* x, double lo, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] < lo ? lo : x[i];
}

void clamp(const double* x, const double* lo, const double* hi, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
}

constexpr Table kScalar{Backend::Scalar, "scalar", dot,      sq_dist,   axpby, axpy,
                        gemv,            gemv_t,   clamp_min, clamp};

}  // namespace

const Table& scalar_table() noexcept { return kScalar; }

}  // namespace viaccel::kernels
