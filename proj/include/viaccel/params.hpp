#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace viaccel {

// Extra-point parameters. The classical methods are the sparsity patterns
//   vanilla (a,0,0,0,0), heavy-ball (a,0,g,0,0), extra-gradient (a,0,0,e,0),
//   Nesterov (a,b,b,0,0), OGDA (a,0,0,0,t)
// in (alpha, beta, gamma, eta, tau) order.
struct ViParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  double tau = 0.0;

  // Throws std::invalid_argument unless every field is finite and >= 0.
  void validate() const;
  bool operator==(const ViParams&) const = default;
};

enum class ViMethod { Vanilla, Extragradient, Ogda, HeavyBall, Nesterov, ExtraPoint };

std::string_view to_string(ViMethod m) noexcept;
// Accepts the names printed by to_string. Throws std::invalid_argument.
ViMethod parse_vi_method(std::string_view name);

// Parameters of the optimization scheme
//   p = t1 x + t2 v,  y from p,  z = y - (t3/L) g(y),
//   x+ = y - (t4/L) g(z) - (t5/L)(g(z) - g(y)) + t6 (z - y),
//   v+ = t7 v + t8 y - t9 g(y)
// and of its potential f(x) - f* + C ||v - x*||^2 contracting by 1 - theta.
struct OptParams {
  std::array<double, 9> t{};
  double theta = 0.0;
  double c = 0.0;
  double delta = 0.5;

  // 1-based access matching t1..t9.
  double& ti(std::size_t i) { return t.at(i - 1); }
  double ti(std::size_t i) const { return t.at(i - 1); }

  // Throws std::invalid_argument on negative or non-finite entries.
  void validate() const;
  bool operator==(const OptParams&) const = default;
};

enum class YRule { YEqualsP, YGradStep };

std::string_view to_string(YRule r) noexcept;
YRule parse_y_rule(std::string_view name);

}  // namespace viaccel
