#include "viaccel/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "viaccel/certificate.hpp"

namespace viaccel {

ViParams table_vi_preset(ViMethod method, VITableColumn column) {
  const bool c = column == VITableColumn::Constrained;
  switch (method) {
    case ViMethod::Vanilla:
      return ViParams{c ? 0.0235 : 0.0095, 0.0, 0.0, 0.0, 0.0};
    case ViMethod::HeavyBall:
      return ViParams{c ? 0.0188 : 0.0119, 0.0, c ? 0.0146 : 0.0365, 0.0, 0.0};
    case ViMethod::Extragradient:
      return ViParams{c ? 0.034 : 0.021, 0.0, 0.0, c ? 0.034 : 0.021, 0.0};
    case ViMethod::Nesterov:
      return ViParams{c ? 0.0146 : 0.0084, 0.175, 0.175, 0.0, 0.0};
    case ViMethod::Ogda:
      return ViParams{c ? 0.024 : 0.019, 0.0, 0.0, 0.0, c ? 0.0234 : 0.0117};
    case ViMethod::ExtraPoint:
      return c ? ViParams{0.034, 0.34, 0.34, 0.0323, 0.0068}
               : ViParams{0.021, 0.3276, 0.3276, 0.0202, 0.0021};
  }
  throw std::invalid_argument("no table preset for this method");
}

std::optional<ViParams> table_opt_gradient_preset(ViMethod method, OptTableColumn column) {
  const bool q = column == OptTableColumn::Quadratic;
  switch (method) {
    case ViMethod::Vanilla:
      return ViParams{q ? 0.0407 : 38.4615, 0.0, 0.0, 0.0, 0.0};
    case ViMethod::HeavyBall:
      return ViParams{q ? 0.0717 : 9.8765, 0.0, q ? 0.8349 : 0.7778, 0.0, 0.0};
    case ViMethod::Extragradient:
      return ViParams{q ? 0.021 : 19.7, 0.0, 0.0, q ? 0.021 : 19.7, 0.0};
    case ViMethod::Nesterov:
      return ViParams{q ? 0.0214 : 28.5714, q ? 0.9075 : 0.455, q ? 0.9075 : 0.455, 0.0, 0.0};
    case ViMethod::Ogda:
      return ViParams{q ? 0.0387 : 39.2, 0.0, 0.0, 0.0, q ? 0.002 : 0.2};
    case ViMethod::ExtraPoint:
      break;
  }
  return std::nullopt;
}

OptParams table_opt_preset(OptTableColumn column, double sigma) {
  OptParams p;
  if (column == OptTableColumn::Quadratic) {
    const double r = std::sqrt(sigma);
    p.t = {0.9538, 1.0 - 0.9538, 0.9, 0.0277, 6.3712, 6.9252, 1.0 - r, r, 0.0485};
  } else {
    p.t = {0.7363, 1.0 - 0.7363, 0.9, 0.0277, 5.5402, 6.6482, 0.6419, 1.0 - 0.6419, 71.6115};
  }
  p.theta = p.ti(8);
  p.c = p.theta / (2.0 * p.ti(9));
  p.delta = p.ti(3);
  return p;
}

ViParams paper_default_vi(ViMethod method, double mu, double lip, bool objective, bool restricted) {
  const double sl = std::sqrt(lip);
  const double sm = std::sqrt(mu);
  const double ratio = (sl - sm) / (sl + sm);
  ViParams p;
  switch (method) {
    case ViMethod::Vanilla:
      if (objective) {
        p.alpha = 1.0 / lip;
        return p;
      }
      return default_vi_params(Regime::Vanilla, mu, lip);
    case ViMethod::Extragradient:
      return default_vi_params(Regime::Extragradient, mu, lip);
    case ViMethod::Ogda:
      return default_vi_params(Regime::Ogda, mu, lip);
    case ViMethod::HeavyBall:
      p.alpha = 4.0 / ((sl + sm) * (sl + sm));
      p.gamma = ratio * ratio;
      return p;
    case ViMethod::Nesterov:
      p.alpha = 1.0 / lip;
      p.beta = ratio;
      p.gamma = ratio;
      return p;
    case ViMethod::ExtraPoint:
      return default_vi_params(restricted ? Regime::ViRestricted : Regime::ViUnrestricted, mu, lip);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace viaccel
