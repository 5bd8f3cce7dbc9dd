#pragma once

#include <cmath>
#include <cstdint>

namespace partlab {

/// pcg64 (PCG XSL RR 128/64, O'Neill). Distinct `stream` values select
/// disjoint output sequences for the same seed, which is how every sampler
/// here parallelizes: logical item i always draws from stream base+i, so
/// results do not depend on how items are assigned to worker threads.
class Pcg64 {
 public:
  explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed;
    std::uint64_t hi = splitmix(s), lo = splitmix(s);
    std::uint64_t t = stream ^ 0xda3e39cb94b95bdbULL;
    std::uint64_t shi = splitmix(t), slo = splitmix(t);
    u128 initstate = (u128(hi) << 64) | lo;
    // distinct streams -> distinct increments (splitmix is a bijection)
    u128 initseq = (u128(shi) << 64) | slo;
    inc_ = (initseq << 1) | 1;
    state_ = 0;
    step();
    state_ += initstate;
    step();
  }

  std::uint64_t next_u64() {
    u128 old = state_;
    step();
    std::uint64_t xored = static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
    unsigned rot = static_cast<unsigned>(old >> 122);
    return (xored >> rot) | (xored << (-rot & 63u));
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); safe to feed into log().
  double next_double_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exp(1) by inversion.
  double next_exponential() { return -std::log(next_double_open()); }

  /// Standard normal via Box–Muller; the second variate of each pair is cached.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(2.0 * next_exponential());
    double a = 6.283185307179586477 * next_double();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  using u128 = unsigned __int128;
  static constexpr u128 kMul = (u128(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

  static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void step() { state_ = state_ * kMul + inc_; }

  u128 state_ = 0;
  u128 inc_ = 1;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace partlab
