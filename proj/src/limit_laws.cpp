#include "partlab/limit_laws.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace partlab {

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gumbel_pdf(double x) { return std::exp(-x - std::exp(-x)); }

double gumbel_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("gumbel_quantile: u must be in (0,1)");
  return -std::log(-std::log(u));
}

double logistic_cdf(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-kPi * x));
  double t = std::exp(kPi * x);
  return t / (1.0 + t);
}

double logistic_pdf(double x) {
  double t = std::exp(-kPi * std::abs(x));
  double d = 1.0 + t;
  return kPi * t / (d * d);
}

double logistic_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("logistic_quantile: u must be in (0,1)");
  return std::log(u / (1.0 - u)) / kPi;
}

double LimitLaw::cdf(double x) const {
  double y = (x - location) / scale;
  return name == Name::gumbel ? gumbel_cdf(y) : logistic_cdf(y);
}

double LimitLaw::pdf(double x) const {
  double y = (x - location) / scale;
  return (name == Name::gumbel ? gumbel_pdf(y) : logistic_pdf(y)) / scale;
}

double LimitLaw::quantile(double u) const {
  double y = name == Name::gumbel ? gumbel_quantile(u) : logistic_quantile(u);
  return location + scale * y;
}

const char* LimitLaw::name_str() const {
  return name == Name::gumbel ? "gumbel" : "logistic_rank";
}

BigRat bernoulli(unsigned index) {
  static std::mutex mu;
  static std::vector<BigRat> table{BigRat(1)};  // B_0 = 1
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= index) {
    unsigned m = static_cast<unsigned>(table.size());
    // sum_{j<m} C(m+1, j) B_j = -(m+1) B_m  for m >= 1
    BigRat sum = 0;
    for (unsigned j = 0; j < m; ++j) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += BigRat(binom) * table[j];
    }
    BigRat bm = -sum / BigRat(m + 1);
    bm.canonicalize();
    table.push_back(bm);
  }
  return table[index];
}

BigRat limit_even_moment(unsigned l) {
  if (l < 1) throw std::domain_error("limit_even_moment: l must be >= 1");
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * l);
  BigRat b = bernoulli(2 * l);
  BigRat result = BigRat(two_pow - 2) * abs(b);
  result.canonicalize();
  return result;
}

double dirichlet_eta(double s) {
  if (!(s > 0.0)) throw std::domain_error("dirichlet_eta: s must be > 0");
  constexpr int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d, sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(k + 1.0, -s);
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

double absolute_moment(double s) {
  if (!(s > 0.0)) throw std::domain_error("absolute_moment: s must be > 0");
  return 2.0 * std::tgamma(s + 1.0) * std::pow(kPi, -s) * dirichlet_eta(s);
}

std::complex<double> complex_gamma(std::complex<double> z) {
  // Lanczos approximation, g = 7, 9 coefficients
  static const double coef[9] = {0.99999999999980993,     676.5203681218851,
                                 -1259.1392167224028,     771.32342877765313,
                                 -176.61502916214059,     12.507343278686905,
                                 -0.13857109526572012,    9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> char_fn_gumbel(double t) { return complex_gamma({1.0, -t}); }

double char_fn_beta_t(double t) {
  double a = std::abs(t);
  if (a < 1e-6) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  }
  if (a > 700.0) return 0.0;  // sinh would overflow; the true value underflows
  return t / std::sinh(t);
}

double char_fn_rank_limit(double t) { return char_fn_beta_t(kPi * t); }

}  // namespace partlab
