#include "partlab/stats.hpp"

#include <cmath>

#include "partlab/rng.hpp"

namespace partlab::stats {

double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  const auto va = a.values(), vb = b.values();
  const double na = static_cast<double>(va.size()), nb = static_cast<double>(vb.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  while (i < va.size() || j < vb.size()) {
    double v = (j >= vb.size() || (i < va.size() && va[i] <= vb[j])) ? va[i] : vb[j];
    while (i < va.size() && va[i] == v) ++i;
    while (j < vb.size() && vb[j] == v) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return best;
}

double ks_critical_one_sample(std::size_t n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_critical: bad alpha");
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks_critical: bad alpha");
  double inv = (static_cast<double>(n) + static_cast<double>(m)) /
               (static_cast<double>(n) * static_cast<double>(m));
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) * std::sqrt(inv);
}

namespace {
double pow_int(double x, unsigned k) {
  double r = 1.0;
  while (k) {
    if (k & 1u) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}
}  // namespace

MomentEstimate moment_estimate(const EmpiricalDistribution& emp, unsigned k) {
  if (k < 1) throw std::domain_error("moment_estimate: k must be >= 1");
  NeumaierSum s1, s2;
  for (double v : emp.values()) {
    double t = pow_int(v, k);
    s1.add(t);
    s2.add(t * t);
  }
  double n = static_cast<double>(emp.size());
  double mean = s1.value() / n;
  MomentEstimate out;
  out.estimate = mean;
  if (emp.size() > 1) {
    double var = (s2.value() - n * mean * mean) / (n - 1.0);
    out.standard_error = std::sqrt(std::max(var, 0.0) / n);
  }
  return out;
}

ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) throw std::domain_error("chi_square_uniformity: need >= 2 categories");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::domain_error("chi_square_uniformity: empty sample");
  double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  ChiSquareResult out;
  out.dof = static_cast<unsigned>(counts.size()) - 1;
  out.low_expected_count = expected < 5.0;
  NeumaierSum sum;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expected;
    sum.add(d * d / expected);
  }
  out.statistic = sum.value();
  return out;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson_correlation: need paired samples, n >= 2");
  double n = static_cast<double>(x.size());
  NeumaierSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  double mx = sx.value() / n, my = sy.value() / n;
  NeumaierSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  double denom = std::sqrt(sxx.value() * syy.value());
  return denom == 0.0 ? 0.0 : sxy.value() / denom;
}

BootstrapInterval bootstrap_correlation_ci(std::span<const double> x, std::span<const double> y,
                                           unsigned rounds, std::uint64_t seed, double alpha) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("bootstrap_correlation_ci: need paired samples");
  std::vector<double> stats(rounds);
  std::vector<double> bx(x.size()), by(y.size());
  for (unsigned r = 0; r < rounds; ++r) {
    Pcg64 rng(seed, r);
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::size_t j = static_cast<std::size_t>(rng.next_double() * static_cast<double>(x.size()));
      if (j >= x.size()) j = x.size() - 1;
      bx[i] = x[j];
      by[i] = y[j];
    }
    stats[r] = pearson_correlation(bx, by);
  }
  std::sort(stats.begin(), stats.end());
  auto quantile = [&](double q) {
    double pos = q * static_cast<double>(rounds - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, stats.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return stats[lo] * (1.0 - frac) + stats[hi] * frac;
  };
  return {quantile(alpha / 2.0), quantile(1.0 - alpha / 2.0)};
}

DistanceCovariance distance_covariance(std::span<const double> x, std::span<const double> y,
                                       std::size_t max_pairs) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("distance_covariance: need paired samples");
  // evenly strided subsample keeps the estimator O(max_pairs^2)
  std::size_t n = x.size();
  std::vector<double> xs, ys;
  if (n > max_pairs) {
    xs.reserve(max_pairs);
    ys.reserve(max_pairs);
    for (std::size_t i = 0; i < max_pairs; ++i) {
      std::size_t j = i * n / max_pairs;
      xs.push_back(x[j]);
      ys.push_back(y[j]);
    }
  } else {
    xs.assign(x.begin(), x.end());
    ys.assign(y.begin(), y.end());
  }
  std::size_t m = xs.size();
  double dm = static_cast<double>(m);

  std::vector<double> arow(m, 0.0), brow(m, 0.0);
  double agrand = 0.0, bgrand = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    NeumaierSum sa, sb;
    for (std::size_t j = 0; j < m; ++j) {
      sa.add(std::abs(xs[i] - xs[j]));
      sb.add(std::abs(ys[i] - ys[j]));
    }
    arow[i] = sa.value() / dm;
    brow[i] = sb.value() / dm;
    agrand += arow[i];
    bgrand += brow[i];
  }
  agrand /= dm;
  bgrand /= dm;

  NeumaierSum sab, saa, sbb;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double A = std::abs(xs[i] - xs[j]) - arow[i] - arow[j] + agrand;
      double B = std::abs(ys[i] - ys[j]) - brow[i] - brow[j] + bgrand;
      sab.add(A * B);
      saa.add(A * A);
      sbb.add(B * B);
    }
  }
  double n2 = dm * dm;
  DistanceCovariance out;
  out.used = m;
  double v = sab.value() / n2;
  out.dcov = std::sqrt(std::max(v, 0.0));
  double denom = std::sqrt(std::sqrt(saa.value() / n2) * std::sqrt(sbb.value() / n2));
  out.dcor = denom == 0.0 ? 0.0 : out.dcov / denom;
  return out;
}

}  // namespace partlab::stats
