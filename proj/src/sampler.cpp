#include "gsss/sampler.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include <nlohmann/json.hpp>

#include "gsss/csv.hpp"
#include "gsss/errors.hpp"
#include "gsss/sphere.hpp"

namespace gsss {

namespace detail {

void step_constant_into(std::span<double> next, std::span<const double> current,
                        std::span<double> tangent, Rng& rng, double* omega_out) {
  sample_tangent_uniform_into(tangent, current, rng);
  const double omega = rng.uniform_angle();
  if (omega_out != nullptr) *omega_out = omega;
  geodesic_point_into(next, current, tangent, omega);
}

int step_ideal_into(std::span<double> next, std::span<const double> current,
                    const TargetDensity& target, std::span<double> tangent, Rng& rng) {
  constexpr int kProposalBudget = 1000000;
  constexpr int kThresholdRetries = 3;

  const double density_here = target.eval(current);
  if (!(density_here > 0.0)) throw ZeroDensityError();

  sample_tangent_uniform_into(tangent, current, rng);

  int rejections = 0;
  for (int attempt = 0; attempt <= kThresholdRetries; ++attempt) {
    const double threshold = density_here * rng.uniform_open01();
    for (int i = 0; i < kProposalBudget; ++i) {
      const double omega = rng.uniform_angle();
      geodesic_point_into(next, current, tangent, omega);
      if (target.eval(next) > threshold) return rejections;
      ++rejections;
    }
  }
  throw RejectionBudgetError();
}

}  // namespace detail

UnitVector gsss_step_constant(const UnitVector& x, Rng& rng) {
  const auto d = static_cast<std::size_t>(x.dim());
  std::vector<double> next(d);
  std::vector<double> tangent(d);
  detail::step_constant_into(next, x.coords(), tangent, rng);
  return UnitVector::from_normalized(std::move(next));
}

UnitVector gsss_step_ideal(const UnitVector& x, const TargetDensity& target, Rng& rng,
                           int* rejections) {
  const auto d = static_cast<std::size_t>(x.dim());
  std::vector<double> next(d);
  std::vector<double> tangent(d);
  const int rej = detail::step_ideal_into(next, x.coords(), target, tangent, rng);
  if (rejections != nullptr) *rejections = rej;
  return UnitVector::from_normalized(std::move(next));
}

Kernel Kernel::constant() { return Kernel(std::nullopt, "constant"); }

Kernel Kernel::ideal(TargetDensity target) {
  std::string label = "ideal(" + target.label + ")";
  return Kernel(std::move(target), std::move(label));
}

ChainTrace run_chain(const UnitVector& init, int n_its, const Kernel& kernel,
                     std::uint64_t seed) {
  if (n_its < 1) throw InvalidRangeError("n_its must be >= 1");
  const int d = init.dim();
  const auto dim = static_cast<std::size_t>(d);

  ChainTrace trace;
  trace.seed = seed;
  trace.d = d;
  trace.n_its = n_its;
  trace.kernel_label = kernel.label();
  trace.states.resize(static_cast<std::size_t>(n_its) * dim);
  trace.rejection_counts.assign(static_cast<std::size_t>(n_its), 0);

  auto row = [&](int i) {
    return std::span<double>(trace.states.data() + static_cast<std::size_t>(i) * dim, dim);
  };
  std::copy(init.coords().begin(), init.coords().end(), row(0).begin());

  Rng rng = Rng::for_stream(seed, 0);
  std::vector<double> tangent(dim);
  for (int i = 1; i < n_its; ++i) {
    try {
      if (kernel.is_ideal()) {
        trace.rejection_counts[static_cast<std::size_t>(i)] =
            detail::step_ideal_into(row(i), row(i - 1), kernel.target(), tangent, rng);
      } else {
        detail::step_constant_into(row(i), row(i - 1), tangent, rng);
      }
    } catch (const Error& e) {
      throw ChainStepError(i, e.what());
    }
  }
  return trace;
}

void ChainTrace::write_csv(std::ostream& os) const {
  os << "iter";
  for (int j = 0; j < d; ++j) os << ",c" << j;
  os << "\n";
  for (int i = 0; i < n_its; ++i) {
    os << i;
    for (double x : state(i)) os << ',' << format_double17(x);
    os << "\n";
  }
}

void ChainTrace::write_sidecar_json(std::ostream& os) const {
  nlohmann::json j;
  j["seed"] = seed;
  j["d"] = d;
  j["n_its"] = n_its;
  j["kernel_label"] = kernel_label;
  j["rejection_counts"] = rejection_counts;
  os << j.dump(2) << "\n";
}

}  // namespace gsss
