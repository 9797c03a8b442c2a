#pragma once

// Dense double-precision inner loops used by every solver step.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA implementation. The active table is chosen once at runtime from
// the CPU feature flags and can be overridden (tests pin both backends and
// compare them). Reductions in the vector backend use a different summation
// order than the scalar one, so results agree to rounding, not bitwise.

#include <cstddef>
#include <string_view>
#include <vector>

namespace viaccel::kernels {

enum class Backend { Scalar, Avx2 };

struct Table {
  Backend backend;
  std::string_view name;

  // sum_i x_i y_i
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_i (x_i - y_i)^2
  double (*sq_dist)(const double* x, const double* y, std::size_t n);
  // out = a x + b y   (out may alias x or y)
  void (*axpby)(double a, const double* x, double b, const double* y, double* out, std::size_t n);
  // y += a x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // out = M x (+ shift when shift != nullptr); M row-major rows x cols, out must not alias x
  void (*gemv)(const double* m, std::size_t rows, std::size_t cols, const double* x,
               const double* shift, double* out);
  // out = M^T x; M row-major rows x cols, out has cols entries and must not alias x
  void (*gemv_t)(const double* m, std::size_t rows, std::size_t cols, const double* x, double* out);
  // out_i = max(x_i, lo)
  void (*clamp_min)(const double* x, double lo, double* out, std::size_t n);
  // out_i = min(max(x_i, lo_i), hi_i)
  void (*clamp)(const double* x, const double* lo, const double* hi, double* out, std::size_t n);
};

const Table& scalar_table() noexcept;

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2+FMA.
const Table* avx2_table() noexcept;

// Table used by Vector/Matrix arithmetic. Defaults to the widest supported backend.
const Table& active() noexcept;

// Throws std::runtime_error when the backend is unavailable on this machine.
void select(Backend backend);

std::vector<Backend> available();

std::string_view to_string(Backend backend) noexcept;

// Parses "scalar", "avx2" or "auto"; "auto" yields the widest available backend.
Backend parse_backend(std::string_view name);

}  // namespace viaccel::kernels
