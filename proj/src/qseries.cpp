#include "partlab/qseries.hpp"

#include <algorithm>

namespace partlab::qseries {

namespace {
const BigInt kZero = 0;
}

const BigInt& ZPoly::at(int e) const {
  if (empty() || e < lo_ || e > hi()) return kZero;
  return coef_[static_cast<std::size_t>(e - lo_)];
}

void ZPoly::set_constant(long value) {
  lo_ = 0;
  coef_.assign(1, BigInt(value));
}

void ZPoly::grow(int new_lo, int new_hi) {
  if (empty()) {
    lo_ = new_lo;
    coef_.resize(static_cast<std::size_t>(new_hi - new_lo + 1));
    return;
  }
  new_lo = std::min(new_lo, lo_);
  new_hi = std::max(new_hi, hi());
  if (new_lo == lo_ && new_hi == hi()) return;
  // pad a little so repeated one-step widenings do not keep reallocating
  int pad = 2 + static_cast<int>(coef_.size() / 8);
  if (new_lo < lo_) new_lo -= pad;
  if (new_hi > hi()) new_hi += pad;
  std::vector<BigInt> next(static_cast<std::size_t>(new_hi - new_lo + 1));
  for (std::size_t i = 0; i < coef_.size(); ++i)
    next[static_cast<std::size_t>(lo_ - new_lo) + i] = std::move(coef_[i]);
  coef_ = std::move(next);
  lo_ = new_lo;
}

void ZPoly::add_shifted(const ZPoly& other, int shift) {
  if (other.empty()) return;
  grow(other.lo_ + shift, other.hi() + shift);
  std::size_t base = static_cast<std::size_t>(other.lo_ + shift - lo_);
  for (std::size_t i = 0; i < other.coef_.size(); ++i) {
    const BigInt& src = other.coef_[i];
    if (mpz_sgn(src.get_mpz_t()) != 0) coef_[base + i] += src;
  }
}

void ZPoly::subtract(const ZPoly& other) {
  if (other.empty()) return;
  grow(other.lo_, other.hi());
  std::size_t base = static_cast<std::size_t>(other.lo_ - lo_);
  for (std::size_t i = 0; i < other.coef_.size(); ++i) {
    const BigInt& src = other.coef_[i];
    if (mpz_sgn(src.get_mpz_t()) != 0) coef_[base + i] -= src;
  }
}

std::map<std::int64_t, BigInt> ZPoly::to_map() const {
  std::map<std::int64_t, BigInt> out;
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (mpz_sgn(coef_[i].get_mpz_t()) != 0) out.emplace(lo_ + static_cast<int>(i), coef_[i]);
  return out;
}

namespace {

// rows *= 1/(1 - z^sign q^j): ascending sweep, rows[d] += z^sign rows[d-j],
// where rows[d-j] has already absorbed lower-order contributions.
void mul_inv_one_minus_zq(std::vector<ZPoly>& rows, std::uint32_t j, int sign) {
  for (std::size_t d = j; d < rows.size(); ++d) rows[d].add_shifted(rows[d - j], sign);
}

// rows *= (1 - q^j): descending sweep so sources are pre-update values.
void mul_one_minus_q(std::vector<ZPoly>& rows, std::uint32_t j) {
  for (std::size_t d = rows.size(); d-- > j;) rows[d].subtract(rows[d - j]);
}

}  // namespace

std::vector<ZPoly> rank_rows(std::uint32_t n_max) {
  std::vector<ZPoly> acc(n_max + 1), out(n_max + 1);
  acc[0].set_constant(1);
  out[0].set_constant(1);  // Durfee square of side 0: the empty partition
  for (std::uint64_t k = 1; k * k <= n_max; ++k) {
    mul_inv_one_minus_zq(acc, static_cast<std::uint32_t>(k), +1);
    mul_inv_one_minus_zq(acc, static_cast<std::uint32_t>(k), -1);
    for (std::size_t d = 0; d + k * k <= n_max; ++d)
      out[d + k * k].add_shifted(acc[d], 0);
  }
  return out;
}

std::vector<ZPoly> crank_rows(std::uint32_t n_max) {
  std::vector<ZPoly> rows(n_max + 1);
  rows[0].set_constant(1);
  for (std::uint32_t j = 1; j <= n_max; ++j) {
    mul_inv_one_minus_zq(rows, j, +1);
    mul_inv_one_minus_zq(rows, j, -1);
    mul_one_minus_q(rows, j);
  }
  return rows;
}

}  // namespace partlab::qseries
