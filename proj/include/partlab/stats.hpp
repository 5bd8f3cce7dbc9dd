#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab::stats {

/// Sample held sorted ascending; n >= 1.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("EmpiricalDistribution: empty sample");
    std::sort(values_.begin(), values_.end());
  }

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// sup_x |F_emp(x) - cdf(x)|, evaluated at both one-sided limits of every
/// sample point (where the sup against a monotone reference is attained).
template <class Cdf>
double ks_one_sample(const EmpiricalDistribution& emp, Cdf&& cdf) {
  const auto v = emp.values();
  const double n = static_cast<double>(v.size());
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double f = cdf(v[i]);
    best = std::max(best, std::abs(f - static_cast<double>(i) / n));
    best = std::max(best, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return best;
}

/// Two-sample KS statistic; symmetric, ties handled by comparing the step
/// functions only after all jumps at a merged value are applied.
double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// One-sample KS critical value sqrt(-ln(alpha/2)/2) / sqrt(n) (asymptotic).
double ks_critical_one_sample(std::size_t n, double alpha);
/// Two-sample analogue with effective size nm/(n+m).
double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha);

struct MomentEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};
/// Sample k-th raw moment with its standard error, compensated summation.
MomentEstimate moment_estimate(const EmpiricalDistribution& emp, unsigned k);

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned dof = 0;
  bool low_expected_count = false;  // some expected cell count < 5
};
/// Pearson statistic of observed category counts against the uniform null.
ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct BootstrapInterval {
  double low = 0.0;
  double high = 0.0;
};
/// Percentile bootstrap CI for the correlation of paired samples.
BootstrapInterval bootstrap_correlation_ci(std::span<const double> x, std::span<const double> y,
                                           unsigned rounds, std::uint64_t seed,
                                           double alpha = 0.05);

struct DistanceCovariance {
  double dcov = 0.0;
  double dcor = 0.0;
  std::size_t used = 0;  // pairs entering the O(used^2) estimate
};
/// Székely distance covariance/correlation; subsamples evenly above max_pairs.
DistanceCovariance distance_covariance(std::span<const double> x, std::span<const double> y,
                                       std::size_t max_pairs = 4000);

}  // namespace partlab::stats
