#pragma once

#include <span>
#include <vector>

#include "gsss/errors.hpp"

namespace gsss {

/// A point on the unit sphere S^{d-1}, d >= 2. The constructor renormalizes,
/// so a live UnitVector always has norm 1 up to 1e-12.
class UnitVector {
 public:
  /// Normalizes `coords`. Throws ZeroVectorError if the norm is below 1e-300,
  /// InvalidDimensionError if fewer than two coordinates.
  explicit UnitVector(std::vector<double> coords);

  /// Standard basis vector e_axis in dimension d.
  static UnitVector basis(int d, int axis = 0);

  /// Wraps coordinates the caller guarantees to be unit-norm already
  /// (debug-asserted). Used on hot paths that produce normalized output.
  static UnitVector from_normalized(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool operator==(const UnitVector& other) const { return coords_ == other.coords_; }

 private:
  struct already_unit_t {};
  UnitVector(std::vector<double> coords, already_unit_t) : coords_(std::move(coords)) {}

  std::vector<double> coords_;
};

/// v / ||v||. Throws ZeroVectorError for degenerate input.
UnitVector normalize(std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

/// Euclidean distance restricted to the sphere, in [0, 2].
double chord_distance(const UnitVector& u, const UnitVector& v);

/// Great circle through `base` with initial direction `tangent`;
/// base and tangent must be orthogonal (|base.tangent| <= 1e-10).
struct Geodesic {
  Geodesic(UnitVector base_in, UnitVector tangent_in);

  UnitVector base;
  UnitVector tangent;
};

/// cos(omega) * base + sin(omega) * tangent, renormalized.
UnitVector geodesic_point(const Geodesic& g, double omega);

/// Rotation by `alpha` in the plane of the first two coordinates, applied
/// without materializing a d x d matrix. Exact isometry up to rounding.
UnitVector rotate_alpha(double alpha, const UnitVector& v);

namespace detail {
/// In-place variant of rotate_alpha on raw coordinates.
void rotate_alpha_inplace(double alpha, std::span<double> v);
/// Writes cos(omega)*base + sin(omega)*tangent into out and renormalizes.
void geodesic_point_into(std::span<double> out, std::span<const double> base,
                         std::span<const double> tangent, double omega);
}  // namespace detail

}  // namespace gsss
