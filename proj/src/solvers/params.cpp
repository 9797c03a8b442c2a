#include "viaccel/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace viaccel {
namespace {

void check_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and nonnegative");
  }
}

}  // namespace

void ViParams::validate() const {
  check_nonnegative(alpha, "alpha");
  check_nonnegative(beta, "beta");
  check_nonnegative(gamma, "gamma");
  check_nonnegative(eta, "eta");
  check_nonnegative(tau, "tau");
}

void OptParams::validate() const {
  static constexpr const char* kNames[] = {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"};
  for (std::size_t i = 0; i < t.size(); ++i) check_nonnegative(t[i], kNames[i]);
  check_nonnegative(theta, "theta");
  check_nonnegative(c, "C");
  check_nonnegative(delta, "delta");
}

std::string_view to_string(ViMethod m) noexcept {
  switch (m) {
    case ViMethod::Vanilla:
      return "vanilla";
    case ViMethod::Extragradient:
      return "extragradient";
    case ViMethod::Ogda:
      return "ogda";
    case ViMethod::HeavyBall:
      return "heavy-ball";
    case ViMethod::Nesterov:
      return "nesterov";
    case ViMethod::ExtraPoint:
      return "extra-point";
  }
  return "unknown";
}

ViMethod parse_vi_method(std::string_view name) {
  for (auto m : {ViMethod::Vanilla, ViMethod::Extragradient, ViMethod::Ogda, ViMethod::HeavyBall,
                 ViMethod::Nesterov, ViMethod::ExtraPoint}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(YRule r) noexcept {
  return r == YRule::YEqualsP ? "y-equals-p" : "y-grad-step";
}

YRule parse_y_rule(std::string_view name) {
  if (name == "y-equals-p") return YRule::YEqualsP;
  if (name == "y-grad-step") return YRule::YGradStep;
  throw std::invalid_argument("unknown y rule '" + std::string(name) +
                              "' (expected y-equals-p or y-grad-step)");
}

}  // namespace viaccel
