#include "partlab/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>

#include "partlab/parallel.hpp"
#include "partlab/rng.hpp"
#include "partlab/stats.hpp"

namespace partlab {

double SamplerConfig::effective_q() const {
  if (q_param != 0.0) {
    if (!(q_param > 0.0 && q_param < 1.0))
      throw std::invalid_argument("SamplerConfig: q_param must lie in (0,1)");
    return q_param;
  }
  return std::exp(-kPi / std::sqrt(6.0 * static_cast<double>(n)));
}

namespace {

// Shared per-batch tables for the geometric-multiplicity proposals.
//
// survival[k] = sum_{i<=k} log(1 - q^i), decreasing in k. The next part size
// with nonzero multiplicity after position `pos` is found by drawing
// E ~ Exp(1) and locating the first k with survival[pos] - survival[k] >= E,
// a binary search instead of a Bernoulli(q^k) trial per k.
struct ProposalTables {
  std::uint32_t n;
  double log_q;              // < 0
  double cost;               // -log q
  std::vector<double> survival;

  ProposalTables(std::uint32_t n_, double q) : n(n_), log_q(std::log(q)), cost(-std::log(q)) {
    survival.resize(n + 1);
    survival[0] = 0.0;
    for (std::uint32_t k = 1; k <= n; ++k)
      survival[k] = survival[k - 1] + std::log1p(-std::exp(log_q * k));
  }

  // first k in (pos, n] with a_k >= 1 given exponential gap e; n+1 if none
  std::uint32_t next_success(std::uint32_t pos, double e) const {
    double target = survival[pos] - e;
    if (survival[n] > target) return n + 1;
    auto it = std::lower_bound(survival.begin() + pos + 1, survival.end(), target,
                               [](double a, double b) { return a > b; });
    return static_cast<std::uint32_t>(it - survival.begin());
  }
};

struct PartEntry {
  std::uint32_t size;
  std::uint64_t mult;
};

// One proposal: multiplicities of parts in [k_min, n]. Returns false as soon
// as the running total exceeds n.
bool propose(const ProposalTables& t, Pcg64& rng, std::uint32_t k_min,
             std::vector<PartEntry>& parts, std::uint64_t& total) {
  parts.clear();
  total = 0;
  std::uint32_t pos = k_min - 1;
  while (pos < t.n) {
    std::uint32_t k = t.next_success(pos, rng.next_exponential());
    if (k > t.n) break;
    // multiplicity is 1 + Geom(q^k)
    std::uint64_t extra =
        static_cast<std::uint64_t>(rng.next_exponential() / (t.cost * static_cast<double>(k)));
    std::uint64_t mult = 1 + extra;
    total += static_cast<std::uint64_t>(k) * mult;
    if (total > t.n) return false;
    parts.push_back({k, mult});
    pos = k;
  }
  return true;
}

StatRecord statistics_from(const std::vector<PartEntry>& parts) {
  // parts ascending by size, all multiplicities >= 1, nonempty
  StatRecord rec;
  rec.lambda1 = parts.back().size;
  std::int64_t ell = 0;
  for (const auto& p : parts) ell += static_cast<std::int64_t>(p.mult);
  rec.ell = ell;
  rec.rank = rec.lambda1 - ell;
  std::int64_t omega = parts.front().size == 1 ? static_cast<std::int64_t>(parts.front().mult) : 0;
  if (omega == 0) {
    rec.crank = rec.lambda1;
  } else {
    std::int64_t mu = 0;
    for (const auto& p : parts)
      if (static_cast<std::int64_t>(p.size) > omega) mu += static_cast<std::int64_t>(p.mult);
    rec.crank = mu - omega;
  }
  return rec;
}

StatRecord sample_one(const ProposalTables& t, const SamplerConfig& cfg, SamplerConfig::Mode mode,
                      std::uint64_t sample_index, std::uint64_t& rejections) {
  Pcg64 rng(cfg.seed, sample_index);
  std::vector<PartEntry> parts;
  parts.reserve(64);
  std::uint64_t total = 0;
  std::uint64_t local_rejections = 0;
  const bool pdc = mode == SamplerConfig::Mode::pdc;
  const std::uint32_t k_min = pdc ? 2 : 1;
  for (;;) {
    bool ok = propose(t, rng, std::min(k_min, t.n + 1), parts, total) && total <= t.n;
    if (ok) {
      if (pdc) {
        // accept with probability q^(n - total), then the 1s are forced
        std::uint64_t deficit = t.n - total;
        ok = deficit == 0 || rng.next_exponential() > t.cost * static_cast<double>(deficit);
        if (ok && deficit > 0) parts.insert(parts.begin(), {1, deficit});
      } else {
        ok = total == t.n;
      }
    }
    if (ok) {
      rejections += local_rejections;
      return statistics_from(parts);
    }
    ++local_rejections;
    if (cfg.max_rejections != 0 && local_rejections > cfg.max_rejections)
      throw ResourceError("fristedt_sample: rejection budget exhausted at sample " +
                          std::to_string(sample_index) + " (" +
                          std::to_string(local_rejections - 1) + " rejections)");
  }
}

}  // namespace

SampleBatch fristedt_sample(const SamplerConfig& config, std::uint64_t count) {
  if (config.n < 1) throw std::invalid_argument("fristedt_sample: n must be >= 1");
  if (count < 1) throw std::invalid_argument("fristedt_sample: count must be >= 1");
  SamplerConfig::Mode mode = config.mode == SamplerConfig::Mode::automatic
                                 ? SamplerConfig::Mode::pdc
                                 : config.mode;
  ProposalTables tables(config.n, config.effective_q());

  SampleBatch batch;
  batch.config = config;
  batch.statistics.resize(count);
  std::vector<std::uint64_t> rejections(effective_workers(config.workers), 0);

  parallel_for(count, config.workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i)
      batch.statistics[i] = sample_one(tables, config, mode, i, local);
    // per-chunk slot: totals merge without ordering effects
    rejections[begin % rejections.size()] += local;
  });
  for (std::uint64_t r : rejections) batch.rejection_count += r;
  return batch;
}

std::vector<double> gumbel_sample(std::uint64_t seed, std::uint64_t count,
                                  std::uint64_t stream_offset) {
  std::vector<double> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Pcg64 rng(seed, stream_offset + i);
    out[i] = -std::log(rng.next_exponential());
  }
  return out;
}

std::vector<double> rank_limit_sample(std::uint64_t seed, std::uint64_t count,
                                      std::uint64_t stream_offset) {
  std::vector<double> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Pcg64 rng(seed, stream_offset + i);
    double w1 = -std::log(rng.next_exponential());
    double w2 = -std::log(rng.next_exponential());
    out[i] = (w1 - w2) / kPi;
  }
  return out;
}

std::vector<double> erdos_lehner_rescale(const SampleBatch& batch, PartStat which) {
  if (batch.statistics.empty()) throw std::invalid_argument("erdos_lehner_rescale: empty batch");
  double b = std::sqrt(6.0 * static_cast<double>(batch.config.n)) / kPi;
  double shift = b * std::log(b);
  std::vector<double> out;
  out.reserve(batch.statistics.size());
  for (const auto& rec : batch.statistics) {
    double v = static_cast<double>(which == PartStat::largest_part ? rec.lambda1 : rec.ell);
    out.push_back((v - shift) / b);
  }
  return out;
}

std::vector<double> rescaled_ranks(const SampleBatch& batch) {
  double scale = std::sqrt(6.0 * static_cast<double>(batch.config.n));
  std::vector<double> out;
  out.reserve(batch.statistics.size());
  for (const auto& rec : batch.statistics) out.push_back(static_cast<double>(rec.rank) / scale);
  return out;
}

std::vector<double> rescaled_cranks(const SampleBatch& batch) {
  double scale = std::sqrt(6.0 * static_cast<double>(batch.config.n));
  std::vector<double> out;
  out.reserve(batch.statistics.size());
  for (const auto& rec : batch.statistics) out.push_back(static_cast<double>(rec.crank) / scale);
  return out;
}

IndependenceReport independence_diagnostic(const SampleBatch& batch, unsigned bootstrap_rounds) {
  if (batch.statistics.size() < 1000)
    throw std::invalid_argument("independence_diagnostic: need >= 1000 samples");
  std::vector<double> a = erdos_lehner_rescale(batch, PartStat::largest_part);
  std::vector<double> b = erdos_lehner_rescale(batch, PartStat::num_parts);
  IndependenceReport rep;
  rep.correlation = stats::pearson_correlation(a, b);
  auto ci = stats::bootstrap_correlation_ci(a, b, bootstrap_rounds,
                                            batch.config.seed ^ 0x626f6f7473ULL);
  rep.ci_low = ci.low;
  rep.ci_high = ci.high;
  auto dc = stats::distance_covariance(a, b);
  rep.distance_correlation = dc.dcor;
  rep.dcov_pairs = dc.used;
  return rep;
}

void write_csv(const SampleBatch& batch, std::ostream& os) {
  os << "n,seed,sample_index,rank,crank,lambda1,ell\n";
  for (std::size_t i = 0; i < batch.statistics.size(); ++i) {
    const auto& r = batch.statistics[i];
    os << batch.config.n << ',' << batch.config.seed << ',' << i << ',' << r.rank << ','
       << r.crank << ',' << r.lambda1 << ',' << r.ell << '\n';
  }
}

}  // namespace partlab
