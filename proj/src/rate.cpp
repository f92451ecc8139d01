#include "gsss/rate.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "gsss/csv.hpp"
#include "gsss/errors.hpp"
#include "gsss/parallel.hpp"

namespace gsss {

namespace {

constexpr int kBaseNodes = 4096;
constexpr int kMaxCachedNodes = 65536;
constexpr int kMaxNodes = 1 << 24;

struct NodeTable {
  std::vector<double> cos2;
  std::vector<double> sin2;
};

// cos^2 / sin^2 at the N equispaced left endpoints of [0, 2pi). For a
// 2pi-periodic integrand the left-endpoint sum equals the trapezoidal rule.
const NodeTable& nodes_for(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::unique_ptr<NodeTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[n];
  if (!entry) {
    entry = std::make_unique<NodeTable>();
    entry->cos2.resize(static_cast<std::size_t>(n));
    entry->sin2.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double w = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
      const double c = std::cos(w);
      const double s = std::sin(w);
      entry->cos2[static_cast<std::size_t>(i)] = c * c;
      entry->sin2[static_cast<std::size_t>(i)] = s * s;
    }
  }
  return *entry;
}

double mean_integrand(int n, double r) {
  if (n <= kMaxCachedNodes) {
    const NodeTable& t = nodes_for(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      sum += std::sqrt(t.cos2[k] + r * t.sin2[k]);
    }
    return sum / n;
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    const double c = std::cos(w);
    const double s = std::sin(w);
    sum += std::sqrt(c * c + r * s * s);
  }
  return sum / n;
}

}  // namespace

double rate_bound(int d) {
  if (d < 2) throw InvalidDimensionError(d);
  if (d == 2) return 1.0;  // integrand is identically 1

  const double r = 1.0 / (d - 1);
  int n = kBaseNodes;
  double value = mean_integrand(n, r);
  while (n < kMaxNodes) {
    n *= 2;
    const double refined = mean_integrand(n, r);
    const bool converged = std::abs(refined - value) <= 1e-13;
    value = refined;
    if (converged) break;
  }
  return value;
}

double rate_bound_asymptote() { return 2.0 / std::numbers::pi; }

double spectral_gap_lower_bound(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw OutOfRangeError("rho must lie in [0, 1], got " + format_double17(rho));
  return 1.0 - rho;
}

RateTable RateTable::compute(int d_min, int d_max) {
  if (!(2 <= d_min && d_min <= d_max && d_max <= 100000))
    throw InvalidRangeError("rate table range must satisfy 2 <= d_min <= d_max <= 1e5");

  RateTable table;
  table.rows.resize(static_cast<std::size_t>(d_max - d_min + 1));
  parallel_for(d_max - d_min + 1, [&](int i) {
    const int d = d_min + i;
    const double rho = rate_bound(d);
    table.rows[static_cast<std::size_t>(i)] =
        RateRow{d, rho, 1.0 - rho, rho - rate_bound_asymptote()};
  });
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (!(table.rows[i].rho < table.rows[i - 1].rho))
      throw Error("rate table is not strictly decreasing; quadrature failure");
  }
  return table;
}

void RateTable::write_csv(std::ostream& os) const {
  os << "d,rho,gap_lower,asymptote_excess\n";
  for (const RateRow& row : rows) {
    os << row.d << ',' << format_double17(row.rho) << ',' << format_double17(row.gap_lower)
       << ',' << format_double17(row.asymptote_excess) << "\n";
  }
}

void RateTable::write_json(std::ostream& os) const {
  nlohmann::json j;
  j["asymptote"] = rate_bound_asymptote();
  j["rows"] = nlohmann::json::array();
  for (const RateRow& row : rows) {
    j["rows"].push_back({{"d", row.d},
                         {"rho", row.rho},
                         {"gap_lower", row.gap_lower},
                         {"asymptote_excess", row.asymptote_excess}});
  }
  os << j.dump(2) << "\n";
}

}  // namespace gsss
