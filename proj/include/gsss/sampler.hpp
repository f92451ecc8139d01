#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsss/rng.hpp"
#include "gsss/target.hpp"
#include "gsss/vec.hpp"

namespace gsss {

/// One transition of the geodesic random walk with constant target: choose a
/// geodesic through x uniformly at random, then a point on it uniformly in
/// arc length. Consumes one tangent draw and one angle draw.
UnitVector gsss_step_constant(const UnitVector& x, Rng& rng);

/// One transition of the ideal geodesic slice sampler for an arbitrary
/// target: threshold t ~ U((0, rho(x))), geodesic uniform through x, then a
/// uniform point on the slice-geodesic intersection, realized by rejecting
/// uniform angles until the density at the proposal exceeds t. Exact because
/// x itself always lies on the slice, so the accepted set has positive arc
/// measure for lower semi-continuous densities.
///
/// `rejections`, when given, receives the number of rejected proposals.
/// Throws ZeroDensityError if rho(x) = 0 and RejectionBudgetError if no
/// proposal is accepted within 10^6 draws for each of 4 threshold draws.
UnitVector gsss_step_ideal(const UnitVector& x, const TargetDensity& target, Rng& rng,
                           int* rejections = nullptr);

/// Transition kernel selector for run_chain.
class Kernel {
 public:
  static Kernel constant();
  static Kernel ideal(TargetDensity target);

  bool is_ideal() const { return target_.has_value(); }
  const TargetDensity& target() const { return *target_; }
  const std::string& label() const { return label_; }

 private:
  Kernel(std::optional<TargetDensity> target, std::string label)
      : target_(std::move(target)), label_(std::move(label)) {}

  std::optional<TargetDensity> target_;
  std::string label_;
};

/// A seeded realization of the chain. Row k of `states` is the state after k
/// transitions; row 0 is the initial state. Every row has unit norm.
struct ChainTrace {
  std::vector<double> states;  // n_its x d, row-major
  std::uint64_t seed = 0;
  int d = 0;
  int n_its = 0;
  std::string kernel_label;
  std::vector<int> rejection_counts;  // per step; all zero for the constant kernel

  std::span<const double> state(int i) const {
    return {states.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(d),
            static_cast<std::size_t>(d)};
  }

  /// CSV with header iter,c0,...,c{d-1}; floats at 17 significant digits.
  void write_csv(std::ostream& os) const;
  /// JSON sidecar: seed, d, n_its, kernel_label, rejection_counts.
  void write_sidecar_json(std::ostream& os) const;
};

/// Runs n_its - 1 transitions from `init`. Deterministic in
/// (init, n_its, kernel, seed); the chain owns stream 0 of `seed`.
/// Step failures are rethrown as ChainStepError with the iteration index.
ChainTrace run_chain(const UnitVector& init, int n_its, const Kernel& kernel,
                     std::uint64_t seed);

namespace detail {
/// Constant-target step into a caller buffer; `tangent` is scratch of size d.
/// On return `tangent` holds the geodesic direction used and `omega_out`
/// (when non-null) the angle, which unit tests use to recover the on-geodesic
/// position of the output.
void step_constant_into(std::span<double> next, std::span<const double> current,
                        std::span<double> tangent, Rng& rng, double* omega_out = nullptr);

int step_ideal_into(std::span<double> next, std::span<const double> current,
                    const TargetDensity& target, std::span<double> tangent, Rng& rng);
}  // namespace detail

}  // namespace gsss
