#include "gsss/target.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gsss/errors.hpp"

namespace gsss {

TargetDensity constant_target(double value) {
  return {[value](std::span<const double>) { return value; }, "constant"};
}

TargetDensity hemisphere_target() {
  return {[](std::span<const double> v) { return v[0] > 0.0 ? 1.0 : 0.0; }, "hemisphere"};
}

TargetDensity exp_linear_target(double kappa) {
  char label[48];
  std::snprintf(label, sizeof(label), "exp-linear:%g", kappa);
  return {[kappa](std::span<const double> v) { return std::exp(kappa * v[0]); }, label};
}

TargetDensity make_target(const std::string& spec) {
  if (spec == "constant") return constant_target();
  if (spec == "hemisphere") return hemisphere_target();
  const std::string prefix = "exp-linear:";
  if (spec.rfind(prefix, 0) == 0) {
    try {
      return exp_linear_target(std::stod(spec.substr(prefix.size())));
    } catch (const std::logic_error&) {
      throw InvalidRangeError("bad exp-linear parameter in density spec '" + spec + "'");
    }
  }
  throw InvalidRangeError("unknown density '" + spec +
                          "' (expected constant, hemisphere or exp-linear:<kappa>)");
}

}  // namespace gsss
