#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab {

/// A partition of n: weakly decreasing positive parts. The empty partition
/// (n = 0) is allowed.
class Partition {
 public:
  Partition() = default;

  /// Validates ordering and positivity; throws std::invalid_argument.
  explicit Partition(std::vector<std::int64_t> parts);

  /// Caller guarantees parts are weakly decreasing and positive.
  static Partition unchecked(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::span<const std::int64_t> view() const { return parts_; }
  std::int64_t n() const { return n_; }
  bool empty() const { return parts_.empty(); }
  std::int64_t num_parts() const { return static_cast<std::int64_t>(parts_.size()); }

  /// Largest part; throws std::domain_error on the empty partition.
  std::int64_t largest() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t n_ = 0;
};

/// Largest part minus number of parts. Undefined (domain error) when empty.
std::int64_t rank(std::span<const std::int64_t> parts);
std::int64_t rank(const Partition& p);

/// Andrews–Garvan crank: the largest part when no part equals 1, otherwise
/// (number of parts greater than omega) - omega, where omega counts the 1s.
/// Undefined (domain error) when empty.
std::int64_t crank(std::span<const std::int64_t> parts);
std::int64_t crank(const Partition& p);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Exact p(n) via the pentagonal-number recurrence. The memo table grows on
/// demand and is guarded by a mutex, so concurrent callers are safe.
class PartitionCounter {
 public:
  const BigInt& operator()(std::uint32_t n) const;

 private:
  mutable std::mutex mu_;
  // deque: growth never invalidates references to existing entries
  mutable std::deque<BigInt> table_;
};

/// p(n) from a process-wide shared counter.
const BigInt& partition_count(std::uint32_t n);

/// Visits every partition of n exactly once, in lexicographically decreasing
/// order of the part sequence: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
/// Intended for n up to about 60; the visit count is p(n).
template <class Visit>
void for_each_partition(std::uint32_t n, Visit&& visit) {
  if (n == 0) {
    visit(std::span<const std::int64_t>{});
    return;
  }
  std::vector<std::int64_t> a{static_cast<std::int64_t>(n)};
  for (;;) {
    visit(std::span<const std::int64_t>(a));
    // rightmost part > 1; everything after it is a run of 1s
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == 1) --i;
    if (i == 0) return;
    --i;
    std::int64_t rem = static_cast<std::int64_t>(a.size() - 1 - i) + 1;
    a.resize(i + 1);
    a[i] -= 1;
    std::int64_t m = a[i];
    while (rem > m) {
      a.push_back(m);
      rem -= m;
    }
    if (rem > 0) a.push_back(rem);
  }
}

/// Materializes all partitions of n in the canonical order above.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

}  // namespace partlab
