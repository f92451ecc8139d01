#pragma once

#include <functional>
#include <span>
#include <string>

namespace gsss {

/// Unnormalized target density on the sphere. `eval` must return a finite
/// nonnegative value for every unit vector.
struct TargetDensity {
  std::function<double(std::span<const double>)> eval;
  std::string label;
};

TargetDensity constant_target(double value = 1.0);

/// Indicator of the open hemisphere {v : v_1 > 0}.
TargetDensity hemisphere_target();

/// exp(kappa * v_1), a von Mises-Fisher style density around e_1.
TargetDensity exp_linear_target(double kappa);

/// Parses a built-in density name: "constant", "hemisphere" or
/// "exp-linear:<kappa>". Throws InvalidRangeError for unknown names.
TargetDensity make_target(const std::string& spec);

}  // namespace gsss
