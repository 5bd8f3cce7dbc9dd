#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab::qseries {

/// Dense Laurent polynomial in z with BigInt coefficients on [lo, hi].
class ZPoly {
 public:
  ZPoly() = default;

  bool empty() const { return coef_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coef_.size()) - 1; }

  /// Coefficient of z^e (zero outside the stored range).
  const BigInt& at(int e) const;

  void set_constant(long value);

  /// *this += z^shift * other
  void add_shifted(const ZPoly& other, int shift);

  /// *this -= other
  void subtract(const ZPoly& other);

  /// Nonzero coefficients as an exponent -> value map.
  std::map<std::int64_t, BigInt> to_map() const;

 private:
  void grow(int new_lo, int new_hi);

  int lo_ = 0;
  std::vector<BigInt> coef_;
};

/// rows[d] holds the generating polynomial in z for partitions of d counted
/// by rank: the z^m coefficient of rows[d] is N(d, m). Built from the Durfee
/// square expansion  sum_k q^{k^2} / ((zq;q)_k (q/z;q)_k)  truncated at q^n_max.
std::vector<ZPoly> rank_rows(std::uint32_t n_max);

/// rows[d] analogous for the crank, from the product
/// prod_j (1-q^j) / ((1-z q^j)(1-q^j/z)). Valid as crank counts for d >= 2;
/// the d = 1 row is the well-known anomaly {-1:1, 0:-1, 1:1}.
std::vector<ZPoly> crank_rows(std::uint32_t n_max);

}  // namespace partlab::qseries
