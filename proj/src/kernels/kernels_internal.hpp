#pragma once

#include "viaccel/kernels.hpp"

namespace viaccel::kernels::detail {

// Defined in avx2.cpp when that translation unit is part of the build.
const Table& avx2_table_unchecked() noexcept;

}  // namespace viaccel::kernels::detail
