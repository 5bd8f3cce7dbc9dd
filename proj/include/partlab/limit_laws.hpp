#pragma once

#include <complex>

#include "partlab/numeric.hpp"

namespace partlab {

/// Extreme value (Gumbel) distribution function e^{-e^{-x}}.
double gumbel_cdf(double x);
double gumbel_pdf(double x);
/// Inverse of gumbel_cdf on (0, 1).
double gumbel_quantile(double u);

/// Logistic limit of the rescaled rank: F_r(x) = 1/(1+e^{-pi x}).
/// Stable for large |x| (no overflow, monotone to 0 and 1).
double logistic_cdf(double x);
double logistic_pdf(double x);
/// Inverse of logistic_cdf: (1/pi) log(u/(1-u)); domain error outside (0, 1).
double logistic_quantile(double u);

/// Closed-form law descriptor used by the experiment drivers.
struct LimitLaw {
  enum class Name { gumbel, logistic_rank };
  Name name = Name::gumbel;
  double location = 0.0;
  double scale = 1.0;  // applied as (x - location) / scale

  static LimitLaw gumbel() { return {Name::gumbel, 0.0, 1.0}; }
  static LimitLaw logistic_rank() { return {Name::logistic_rank, 0.0, 1.0}; }

  double cdf(double x) const;
  double pdf(double x) const;
  double quantile(double u) const;
  const char* name_str() const;
};

/// Exact Bernoulli number B_index from the binomial-sum recurrence.
/// B_1 = -1/2; odd indices >= 3 give exact zero.
BigRat bernoulli(unsigned index);

/// Exact (2^{2l} - 2) |B_{2l}|, the even-moment limit of the rescaled rank.
BigRat limit_even_moment(unsigned l);

/// Dirichlet eta(s) = sum (-1)^{k-1} k^{-s} for s > 0, by alternating-series
/// acceleration (Cohen–Rodriguez Villegas–Zagier). Equals (1-2^{1-s}) zeta(s)
/// with the removable singularity at s = 1 already built in (eta(1) = log 2).
double dirichlet_eta(double s);

/// s-th absolute moment of the logistic limit: 2 Gamma(s+1) pi^{-s} eta(s).
/// Domain error for s <= 0.
double absolute_moment(double s);

/// Gamma(z) on the complex plane (Lanczos, reflection for Re z < 1/2).
std::complex<double> complex_gamma(std::complex<double> z);

/// Characteristic function of the Gumbel law: Gamma(1 - it).
std::complex<double> char_fn_gumbel(double t);

/// Characteristic function of the logistic limit: t pi / sinh(t pi), = 1 at t = 0.
double char_fn_rank_limit(double t);

/// t / sinh(t) with the removable singularity at 0; satisfies
/// char_fn_beta_t(pi t) == char_fn_rank_limit(t).
double char_fn_beta_t(double t);

}  // namespace partlab
