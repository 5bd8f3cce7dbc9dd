#include "partlab/partition.hpp"

#include <algorithm>
#include <numeric>

namespace partlab {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::unchecked(std::vector<std::int64_t> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  p.n_ = std::accumulate(p.parts_.begin(), p.parts_.end(), std::int64_t{0});
  return p;
}

std::int64_t Partition::largest() const {
  if (parts_.empty()) throw std::domain_error("largest part of the empty partition");
  return parts_.front();
}

std::int64_t rank(std::span<const std::int64_t> parts) {
  if (parts.empty()) throw std::domain_error("rank of the empty partition is undefined");
  return parts.front() - static_cast<std::int64_t>(parts.size());
}

std::int64_t rank(const Partition& p) { return rank(p.view()); }

std::int64_t crank(std::span<const std::int64_t> parts) {
  if (parts.empty()) throw std::domain_error("crank of the empty partition is undefined");
  std::int64_t omega = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++omega;
  if (omega == 0) return parts.front();
  std::int64_t mu = 0;
  for (std::int64_t part : parts) {
    if (part > omega)
      ++mu;
    else
      break;  // parts are weakly decreasing
  }
  return mu - omega;
}

std::int64_t crank(const Partition& p) { return crank(p.view()); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  const auto& parts = p.parts();
  std::vector<std::int64_t> out(static_cast<std::size_t>(parts.front()));
  for (std::int64_t col = 0; col < parts.front(); ++col) {
    // number of rows reaching column col+1
    auto it = std::lower_bound(parts.begin(), parts.end(), col + 1,
                               [](std::int64_t a, std::int64_t b) { return a >= b; });
    out[static_cast<std::size_t>(col)] = it - parts.begin();
  }
  return Partition::unchecked(std::move(out));
}

const BigInt& PartitionCounter::operator()(std::uint32_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (table_.empty()) table_.emplace_back(1);  // p(0) = 1
  while (table_.size() <= n) {
    std::uint32_t m = static_cast<std::uint32_t>(table_.size());
    BigInt total = 0;
    for (std::uint32_t k = 1;; ++k) {
      std::uint64_t g1 = std::uint64_t(k) * (3 * std::uint64_t(k) - 1) / 2;
      std::uint64_t g2 = std::uint64_t(k) * (3 * std::uint64_t(k) + 1) / 2;
      if (g1 > m) break;
      bool add = (k % 2 == 1);
      if (add)
        total += table_[m - g1];
      else
        total -= table_[m - g1];
      if (g2 <= m) {
        if (add)
          total += table_[m - g2];
        else
          total -= table_[m - g2];
      }
    }
    table_.push_back(std::move(total));
  }
  return table_[n];
}

const BigInt& partition_count(std::uint32_t n) {
  static PartitionCounter counter;
  return counter(n);
}

std::vector<Partition> enumerate_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const std::int64_t> parts) {
    out.push_back(Partition::unchecked({parts.begin(), parts.end()}));
  });
  return out;
}

}  // namespace partlab
