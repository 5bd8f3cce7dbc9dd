#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "partlab/numeric.hpp"
#include "partlab/qseries.hpp"

namespace partlab {

enum class Statistic { rank, crank };
enum class CountMethod { enumeration, qseries };

const char* to_string(Statistic s);
const char* to_string(CountMethod m);
Statistic parse_statistic(const std::string& s);
CountMethod parse_method(const std::string& s);

/// Size ceilings per method. These are configuration, not hard limits of the
/// algorithms; exceeding one raises ResourceError.
struct MethodLimits {
  std::uint32_t enumeration_max = 60;
  std::uint32_t qseries_max = 2000;
};

/// Exact distribution of the rank or crank over partitions of n:
/// counts[m] = number of partitions with statistic value m.
///
/// Construction checks the invariants: n >= 1, counts positive, support
/// within |m| <= n-1, and total equal to p(n).
class CountTable {
 public:
  CountTable(std::uint32_t n, Statistic statistic, CountMethod method,
             std::map<std::int64_t, BigInt> counts);

  std::uint32_t n() const { return n_; }
  Statistic statistic() const { return statistic_; }
  CountMethod method() const { return method_; }
  const std::map<std::int64_t, BigInt>& counts() const { return counts_; }
  const BigInt& count(std::int64_t m) const;
  BigInt total() const;

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.n_ == b.n_ && a.statistic_ == b.statistic_ && a.counts_ == b.counts_;
  }

 private:
  std::uint32_t n_;
  Statistic statistic_;
  CountMethod method_;
  std::map<std::int64_t, BigInt> counts_;
};

/// Exact N(n, m) table. Enumeration walks all partitions of n; the q-series
/// route expands the rank generating function. Both agree everywhere both run.
CountTable rank_distribution(std::uint32_t n, CountMethod method, const MethodLimits& limits = {});

/// Exact M(n, m) table. The q-series route requires n >= 2: the coefficient
/// row at n = 1 is the classical generating-function anomaly, not the crank
/// distribution (the combinatorial table there is {-1: 1}).
CountTable crank_distribution(std::uint32_t n, CountMethod method, const MethodLimits& limits = {});

/// Extracts one n from precomputed q-series rows (cheap when many n share a build).
CountTable table_from_rows(const std::vector<qseries::ZPoly>& rows, std::uint32_t n,
                           Statistic statistic);

/// Exact moments N_k(n) = sum_m m^k counts(m), k = 0..k_max.
struct MomentVector {
  std::uint32_t n = 0;
  Statistic statistic = Statistic::rank;
  std::vector<BigInt> raw;  // raw[k] = N_k(n)
};
MomentVector moments(const CountTable& table, unsigned k_max);

/// N_{2l}(n) / ((6n)^l p(n)) carried to `digits` significant digits.
HpReal moment_ratio(const CountTable& table, unsigned l, unsigned digits = 50);

/// Exact CDF of m / sqrt(6n): breakpoints in ascending m with exact-rational
/// cumulative probabilities.
struct RescaledCdf {
  struct Point {
    std::int64_t m;
    double x;     // m / sqrt(6n)
    BigRat cdf;   // P(statistic <= m), exact
  };
  std::uint32_t n = 0;
  std::vector<Point> points;
};
RescaledCdf rescaled_cdf(const CountTable& table);

/// Sup-distance between the rescaled exact CDF and the logistic limit
/// F_r(x) = 1/(1+e^{-pi x}), evaluated at both one-sided limits of every
/// breakpoint (where the sup of step-vs-continuous is attained).
double ks_distance_to_limit(const CountTable& table);

/// CSV with header `n,statistic,m,count`; counts as decimal strings.
void write_csv(const CountTable& table, std::ostream& os);

/// Reads the format written by write_csv (single n and statistic per file).
CountTable read_count_table_csv(std::istream& is);

}  // namespace partlab
