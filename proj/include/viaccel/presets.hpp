#pragma once

#include <optional>
#include <string_view>

#include "viaccel/params.hpp"

namespace viaccel {

// Tuned values of the VI comparison table, per column.
enum class VITableColumn { Unconstrained, Constrained };
// Tuned values of the optimization comparison table, per column.
enum class OptTableColumn { Quadratic, NonQuadratic };

// Every method of the VI table; the values are opaque constants.
ViParams table_vi_preset(ViMethod method, VITableColumn column);

// Gradient-method rows of the optimization table (vanilla is gradient
// descent). ExtraPoint has no row and yields nullopt.
std::optional<ViParams> table_opt_gradient_preset(ViMethod method, OptTableColumn column);

// Extra-point row of the optimization table. t7/t8 of the quadratic column
// depend on sigma. The table gives no theta, C or delta; they are filled in as
// theta = t8, C = theta/(2 t9), delta = t3.
OptParams table_opt_preset(OptTableColumn column, double sigma);

// Textbook step sizes for (mu, L). `objective` selects gradient-descent
// conventions (vanilla alpha = 1/L) over the VI ones (alpha = mu/L^2).
// ExtraPoint returns the restricted or unrestricted example choice.
ViParams paper_default_vi(ViMethod method, double mu, double lip, bool objective, bool restricted);

}  // namespace viaccel
