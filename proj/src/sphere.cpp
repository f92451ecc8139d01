#include "gsss/sphere.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace gsss {

namespace detail {

void sample_uniform_sphere_into(std::span<double> out, Rng& rng) {
  double n2;
  do {
    n2 = 0.0;
    for (double& x : out) {
      x = rng.normal();
      n2 += x * x;
    }
  } while (!(n2 > 1e-300));
  const double inv = 1.0 / std::sqrt(n2);
  for (double& x : out) x *= inv;
}

void sample_tangent_uniform_into(std::span<double> out, std::span<const double> x, Rng& rng) {
  for (;;) {
    for (double& w : out) w = rng.normal();
    const double proj = dot(out, x);
    double n2 = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] -= proj * x[i];
      n2 += out[i] * out[i];
    }
    const double n = std::sqrt(n2);
    if (n >= 1e-12) {
      const double inv = 1.0 / n;
      for (double& w : out) w *= inv;
      return;
    }
  }
}

}  // namespace detail

UnitVector sample_uniform_sphere(int d, Rng& rng) {
  if (d < 2) throw InvalidDimensionError(d);
  std::vector<double> out(static_cast<std::size_t>(d));
  detail::sample_uniform_sphere_into(out, rng);
  return UnitVector::from_normalized(std::move(out));
}

UnitVector sample_tangent_uniform(const UnitVector& x, Rng& rng) {
  std::vector<double> out(static_cast<std::size_t>(x.dim()));
  detail::sample_tangent_uniform_into(out, x.coords(), rng);
  return UnitVector::from_normalized(std::move(out));
}

}  // namespace gsss
