#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace partlab {

using BigInt = mpz_class;  // exact arbitrary-precision integer
using BigRat = mpq_class;  // exact rational
using HpReal = mpf_class;  // arbitrary-precision float

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Sampling or table budget exhausted (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command-line usage (CLI exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline mp_bitcnt_t bits_for_digits(unsigned digits) {
  // log2(10) per decimal digit plus guard bits
  return static_cast<mp_bitcnt_t>(digits * 3.3219280948873623) + 32;
}

/// num/den carrying `digits` significant decimal digits.
inline HpReal hp_ratio(const BigInt& num, const BigInt& den, unsigned digits = 50) {
  if (den == 0) throw std::domain_error("hp_ratio: zero denominator");
  mp_bitcnt_t prec = bits_for_digits(digits);
  HpReal n(num, prec), d(den, prec);
  return n / d;
}

inline HpReal hp_ratio(const BigRat& q, unsigned digits = 50) {
  return hp_ratio(q.get_num(), q.get_den(), digits);
}

/// Kahan–Babuška–Neumaier compensated accumulator.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {

template <class F>
double simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace partlab
