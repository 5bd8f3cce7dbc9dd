#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "partlab/numeric.hpp"

namespace partlab {

/// Configuration for the exact-uniform partition sampler.
struct SamplerConfig {
  enum class Mode {
    automatic,        // pdc
    plain_rejection,  // propose all multiplicities, accept iff total == n
    pdc               // propose multiplicities of parts >= 2, accept with
                      // probability q^(n-m), set the multiplicity of 1 to n-m
  };

  std::uint32_t n = 1;
  std::uint64_t seed = 0;
  double q_param = 0.0;               // 0 -> default exp(-pi / sqrt(6n))
  std::uint64_t max_rejections = 0;   // per sample; 0 -> unlimited
  Mode mode = Mode::automatic;
  unsigned workers = 0;               // 0 -> hardware concurrency

  double effective_q() const;
};

/// Per-partition statistics recorded at acceptance time; the partition
/// itself is not stored.
struct StatRecord {
  std::int64_t rank = 0;
  std::int64_t crank = 0;
  std::int64_t lambda1 = 0;  // largest part
  std::int64_t ell = 0;      // number of parts
};

struct SampleBatch {
  SamplerConfig config;
  std::vector<StatRecord> statistics;
  std::uint64_t rejection_count = 0;  // across all samples

  double acceptance_rate() const {
    double accepted = static_cast<double>(statistics.size());
    return accepted / (accepted + static_cast<double>(rejection_count));
  }
};

/// Draws `count` exactly-uniform partitions of n. Part multiplicities are
/// independent geometrics with parameter q^k conditioned on total size n by
/// rejection; sample i consumes only RNG stream i, so the batch is identical
/// for every worker count. Raises ResourceError when a sample exceeds
/// max_rejections.
SampleBatch fristedt_sample(const SamplerConfig& config, std::uint64_t count);

/// i.i.d. Gumbel draws -log(-log U). Draw i uses stream stream_offset + i.
std::vector<double> gumbel_sample(std::uint64_t seed, std::uint64_t count,
                                  std::uint64_t stream_offset = 0);

/// i.i.d. draws of (W1 - W2)/pi with W independent Gumbel; distributed as the
/// logistic rank limit.
std::vector<double> rank_limit_sample(std::uint64_t seed, std::uint64_t count,
                                      std::uint64_t stream_offset = 0);

enum class PartStat { largest_part, num_parts };

/// Erdos–Lehner rescaling (v - b log b) / b with b = sqrt(6n)/pi, applied to
/// the recorded largest parts (or part counts, which share the limit by
/// conjugation symmetry).
std::vector<double> erdos_lehner_rescale(const SampleBatch& batch,
                                         PartStat which = PartStat::largest_part);

/// Recorded ranks (or cranks) divided by sqrt(6n).
std::vector<double> rescaled_ranks(const SampleBatch& batch);
std::vector<double> rescaled_cranks(const SampleBatch& batch);

struct IndependenceReport {
  double correlation = 0.0;
  double ci_low = 0.0;   // 95% bootstrap interval for the correlation
  double ci_high = 0.0;
  double distance_correlation = 0.0;
  std::size_t dcov_pairs = 0;
};

/// Sample correlation of rescaled largest part vs rescaled part count, with a
/// bootstrap interval and a distance-correlation estimate. Needs >= 1000
/// samples.
IndependenceReport independence_diagnostic(const SampleBatch& batch,
                                           unsigned bootstrap_rounds = 1000);

/// CSV with header `n,seed,sample_index,rank,crank,lambda1,ell`.
void write_csv(const SampleBatch& batch, std::ostream& os);

}  // namespace partlab
