#include "viaccel/feasible_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "viaccel/kernels.hpp"

namespace viaccel {

FeasibleSet FeasibleSet::box(Vector lower, Vector upper) {
  require_same_size(lower, upper, "box bounds");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] <= upper[i])) {
      throw std::invalid_argument("box bounds: lower[" + std::to_string(i) + "] exceeds upper");
    }
  }
  return FeasibleSet(Box{std::move(lower), std::move(upper)});
}

FeasibleSet FeasibleSet::ball(Vector center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
  return FeasibleSet(EuclideanBall{std::move(center), radius});
}

SetKind FeasibleSet::kind() const noexcept { return static_cast<SetKind>(variant_.index()); }

std::string_view FeasibleSet::name() const noexcept {
  switch (kind()) {
    case SetKind::WholeSpace:
      return "whole-space";
    case SetKind::NonnegativeOrthant:
      return "nonnegative-orthant";
    case SetKind::Box:
      return "box";
    case SetKind::EuclideanBall:
      return "ball";
  }
  return "unknown";
}

std::optional<std::size_t> FeasibleSet::dimension() const noexcept {
  if (const auto* b = std::get_if<Box>(&variant_)) return b->lower.size();
  if (const auto* b = std::get_if<EuclideanBall>(&variant_)) return b->center.size();
  return std::nullopt;
}

void FeasibleSet::check_dimension(const Vector& z) const {
  if (auto n = dimension(); n && *n != z.size()) {
    throw std::invalid_argument("projection onto " + std::string(name()) + ": dimension mismatch (" +
                                std::to_string(z.size()) + " vs " + std::to_string(*n) + ")");
  }
}

Vector FeasibleSet::project(const Vector& z) const {
  Vector out = z;
  project_into(z, out);
  return out;
}

void FeasibleSet::project_into(const Vector& z, Vector& out) const {
  check_dimension(z);
  require_same_size(z, out, "projection output");
  const auto& k = kernels::active();
  switch (kind()) {
    case SetKind::WholeSpace:
      if (&z != &out) out = z;
      return;
    case SetKind::NonnegativeOrthant:
      k.clamp_min(z.data(), 0.0, out.data(), z.size());
      return;
    case SetKind::Box: {
      const auto& b = std::get<Box>(variant_);
      k.clamp(z.data(), b.lower.data(), b.upper.data(), out.data(), z.size());
      return;
    }
    case SetKind::EuclideanBall: {
      const auto& b = std::get<EuclideanBall>(variant_);
      const double d = distance(z, b.center);
      if (d <= b.radius) {
        if (&z != &out) out = z;
        return;
      }
      const double s = b.radius / d;
      // c + s (z - c), written so that out may alias z
      k.axpby(s, z.data(), 1.0 - s, b.center.data(), out.data(), z.size());
      return;
    }
  }
}

bool FeasibleSet::contains(const Vector& z, double tol) const {
  check_dimension(z);
  switch (kind()) {
    case SetKind::WholeSpace:
      return true;
    case SetKind::NonnegativeOrthant:
      for (double x : z) {
        if (x < -tol) return false;
      }
      return true;
    case SetKind::Box: {
      const auto& b = std::get<Box>(variant_);
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < b.lower[i] - tol || z[i] > b.upper[i] + tol) return false;
      }
      return true;
    }
    case SetKind::EuclideanBall: {
      const auto& b = std::get<EuclideanBall>(variant_);
      return distance(z, b.center) <= b.radius + tol;
    }
  }
  return false;
}

Vector project(const FeasibleSet& set, const Vector& z) { return set.project(z); }

}  // namespace viaccel
