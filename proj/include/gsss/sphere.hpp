#pragma once

#include <span>

#include "gsss/rng.hpp"
#include "gsss/vec.hpp"

namespace gsss {

/// Uniform draw from S^{d-1} w.r.t. surface measure: d independent standard
/// normals, normalized.
UnitVector sample_uniform_sphere(int d, Rng& rng);

/// Uniform draw from the great subsphere {z : x.z = 0}. Gaussian draw,
/// projected orthogonal to x, normalized; resampled in the (measure-zero)
/// event that the projection is degenerate. At d = 2 this yields one of the
/// two unit vectors orthogonal to x with equal probability.
UnitVector sample_tangent_uniform(const UnitVector& x, Rng& rng);

namespace detail {
/// Allocation-free variants writing into caller buffers.
void sample_uniform_sphere_into(std::span<double> out, Rng& rng);
void sample_tangent_uniform_into(std::span<double> out, std::span<const double> x, Rng& rng);
}  // namespace detail

}  // namespace gsss
