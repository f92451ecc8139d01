#pragma once

#include <cstdint>
#include <iosfwd>

#include "gsss/vec.hpp"

namespace gsss {

/// Chord length between v and its image under the first-plane rotation by
/// alpha: sqrt(2 (1 - cos alpha) (v_1^2 + v_2^2)). Agrees with
/// chord_distance(v, rotate_alpha(alpha, v)) to 1e-10.
double coupled_chord_factor(double alpha, const UnitVector& v);

/// Monte Carlo estimate of the coupled contraction factor.
struct CouplingReport {
  int d = 0;
  double alpha = 0.0;
  std::int64_t n_samples = 0;
  double estimate = 0.0;   // mean of sqrt(v_1^2 + v_2^2) under one kernel step from e_1
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  double rate_bound = 0.0; // analytic bound for the same dimension
  std::uint64_t seed = 0;

  void write_json(std::ostream& os) const;
  /// Single CSV row with header d,alpha,n_samples,estimate,std_error,rate_bound,seed.
  void write_csv(std::ostream& os) const;
};

/// Estimates the contraction factor of the rotation coupling by averaging
/// sqrt(v_1^2 + v_2^2) over n_samples independent kernel draws from e_1.
/// The coupled chord ratio ||v - R_alpha v|| / ||e_1 - R_alpha e_1|| equals
/// that statistic for every alpha; the estimator verifies this identity per
/// sample to 1e-10 and records alpha without using it in the estimate, so
/// equal seeds give bitwise-equal estimates across alphas.
///
/// Samples are generated in 64 fixed blocks with per-block RNG streams and
/// reduced in block order; results do not depend on the worker count.
CouplingReport estimate_dobrushin_coupled(int d, double alpha, std::int64_t n_samples,
                                          std::uint64_t seed);

}  // namespace gsss
