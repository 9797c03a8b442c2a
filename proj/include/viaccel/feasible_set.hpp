#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "viaccel/vector.hpp"

namespace viaccel {

struct WholeSpace {};
struct NonnegativeOrthant {};
struct Box {
  Vector lower;
  Vector upper;
};
struct EuclideanBall {
  Vector center;
  double radius;
};

enum class SetKind { WholeSpace, NonnegativeOrthant, Box, EuclideanBall };

// Closed convex set with a closed-form Euclidean projection.
class FeasibleSet {
 public:
  FeasibleSet() : variant_(WholeSpace{}) {}

  static FeasibleSet whole_space() { return FeasibleSet(WholeSpace{}); }
  static FeasibleSet nonnegative_orthant() { return FeasibleSet(NonnegativeOrthant{}); }
  // Throws std::invalid_argument unless lower <= upper componentwise.
  static FeasibleSet box(Vector lower, Vector upper);
  // Throws std::invalid_argument unless radius > 0 and finite.
  static FeasibleSet ball(Vector center, double radius);

  SetKind kind() const noexcept;
  std::string_view name() const noexcept;
  bool is_whole_space() const noexcept { return kind() == SetKind::WholeSpace; }

  // Dimension for Box and EuclideanBall; WholeSpace and the orthant fit any n.
  std::optional<std::size_t> dimension() const noexcept;

  Vector project(const Vector& z) const;
  // out may alias z.
  void project_into(const Vector& z, Vector& out) const;

  // Membership with absolute slack `tol` per constraint.
  bool contains(const Vector& z, double tol = 0.0) const;

  const std::variant<WholeSpace, NonnegativeOrthant, Box, EuclideanBall>& variant() const noexcept {
    return variant_;
  }

 private:
  template <class T>
  explicit FeasibleSet(T v) : variant_(std::move(v)) {}

  void check_dimension(const Vector& z) const;

  std::variant<WholeSpace, NonnegativeOrthant, Box, EuclideanBall> variant_;
};

Vector project(const FeasibleSet& set, const Vector& z);

}  // namespace viaccel
