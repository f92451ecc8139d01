#include "gsss/vec.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>

namespace gsss {

namespace {
constexpr double kDegenerateNorm = 1e-300;
constexpr double kOrthogonalityTol = 1e-10;
}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InvalidDimensionError(static_cast<int>(coords_.size()));
  const double n = norm(coords_);
  if (!(n > kDegenerateNorm)) throw ZeroVectorError();
  const double inv = 1.0 / n;
  for (double& c : coords_) c *= inv;
}

UnitVector UnitVector::basis(int d, int axis) {
  if (d < 2) throw InvalidDimensionError(d);
  std::vector<double> c(static_cast<std::size_t>(d), 0.0);
  c[static_cast<std::size_t>(axis)] = 1.0;
  return UnitVector(std::move(c), already_unit_t{});
}

UnitVector UnitVector::from_normalized(std::vector<double> coords) {
  assert(coords.size() >= 2);
  assert(std::abs(norm(coords) - 1.0) < 1e-9);
  return UnitVector(std::move(coords), already_unit_t{});
}

UnitVector normalize(std::span<const double> v) {
  return UnitVector(std::vector<double>(v.begin(), v.end()));
}

double chord_distance(const UnitVector& u, const UnitVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatchError(u.dim(), v.dim());
  double s = 0.0;
  const auto a = u.coords();
  const auto b = v.coords();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

Geodesic::Geodesic(UnitVector base_in, UnitVector tangent_in)
    : base(std::move(base_in)), tangent(std::move(tangent_in)) {
  if (base.dim() != tangent.dim()) throw DimensionMismatchError(base.dim(), tangent.dim());
  const double inner = dot(base.coords(), tangent.coords());
  if (std::abs(inner) > kOrthogonalityTol) throw OrthogonalityError(inner);
}

namespace detail {

void geodesic_point_into(std::span<double> out, std::span<const double> base,
                         std::span<const double> tangent, double omega) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * base[i] + s * tangent[i];
  // Renormalize every step so chain states cannot drift off the sphere.
  const double inv = 1.0 / norm(out);
  for (double& x : out) x *= inv;
}

void rotate_alpha_inplace(double alpha, std::span<double> v) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double v1 = v[0];
  const double v2 = v[1];
  v[0] = c * v1 - s * v2;
  v[1] = s * v1 + c * v2;
}

}  // namespace detail

UnitVector geodesic_point(const Geodesic& g, double omega) {
  std::vector<double> out(static_cast<std::size_t>(g.base.dim()));
  detail::geodesic_point_into(out, g.base.coords(), g.tangent.coords(), omega);
  return UnitVector::from_normalized(std::move(out));
}

UnitVector rotate_alpha(double alpha, const UnitVector& v) {
  std::vector<double> out(v.coords().begin(), v.coords().end());
  detail::rotate_alpha_inplace(alpha, out);
  return UnitVector::from_normalized(std::move(out));
}

}  // namespace gsss
