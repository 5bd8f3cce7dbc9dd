#include "partlab/count_table.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "partlab/limit_laws.hpp"
#include "partlab/partition.hpp"

namespace partlab {

const char* to_string(Statistic s) { return s == Statistic::rank ? "rank" : "crank"; }
const char* to_string(CountMethod m) {
  return m == CountMethod::enumeration ? "enumeration" : "qseries";
}

Statistic parse_statistic(const std::string& s) {
  if (s == "rank") return Statistic::rank;
  if (s == "crank") return Statistic::crank;
  throw UsageError("unknown statistic: " + s);
}

CountMethod parse_method(const std::string& s) {
  if (s == "enumeration") return CountMethod::enumeration;
  if (s == "qseries") return CountMethod::qseries;
  throw UsageError("unknown method: " + s);
}

CountTable::CountTable(std::uint32_t n, Statistic statistic, CountMethod method,
                       std::map<std::int64_t, BigInt> counts)
    : n_(n), statistic_(statistic), method_(method), counts_(std::move(counts)) {
  if (n_ < 1) throw std::domain_error("CountTable: n must be >= 1");
  BigInt sum = 0;
  std::int64_t bound = static_cast<std::int64_t>(n_) - 1;
  for (const auto& [m, c] : counts_) {
    if (c <= 0) throw std::logic_error("CountTable: nonpositive count");
    if (m < -bound || m > bound) throw std::logic_error("CountTable: support outside |m| <= n-1");
    sum += c;
  }
  if (sum != partition_count(n_)) throw std::logic_error("CountTable: total != p(n)");
}

const BigInt& CountTable::count(std::int64_t m) const {
  static const BigInt zero = 0;
  auto it = counts_.find(m);
  return it == counts_.end() ? zero : it->second;
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [m, c] : counts_) sum += c;
  return sum;
}

namespace {

CountTable from_enumeration(std::uint32_t n, Statistic statistic) {
  std::map<std::int64_t, BigInt> counts;
  for_each_partition(n, [&](std::span<const std::int64_t> parts) {
    std::int64_t m = statistic == Statistic::rank ? rank(parts) : crank(parts);
    counts[m] += 1;
  });
  return CountTable(n, statistic, CountMethod::enumeration, std::move(counts));
}

}  // namespace

CountTable table_from_rows(const std::vector<qseries::ZPoly>& rows, std::uint32_t n,
                           Statistic statistic) {
  if (n >= rows.size()) throw std::out_of_range("table_from_rows: n beyond built rows");
  std::map<std::int64_t, BigInt> counts = rows[n].to_map();
  return CountTable(n, statistic, CountMethod::qseries, std::move(counts));
}

CountTable rank_distribution(std::uint32_t n, CountMethod method, const MethodLimits& limits) {
  if (n < 1) throw std::domain_error("rank_distribution: n must be >= 1");
  if (method == CountMethod::enumeration) {
    if (n > limits.enumeration_max)
      throw ResourceError("rank_distribution: n exceeds enumeration ceiling");
    return from_enumeration(n, Statistic::rank);
  }
  if (n > limits.qseries_max) throw ResourceError("rank_distribution: n exceeds qseries ceiling");
  return table_from_rows(qseries::rank_rows(n), n, Statistic::rank);
}

CountTable crank_distribution(std::uint32_t n, CountMethod method, const MethodLimits& limits) {
  if (n < 1) throw std::domain_error("crank_distribution: n must be >= 1");
  if (method == CountMethod::enumeration) {
    if (n > limits.enumeration_max)
      throw ResourceError("crank_distribution: n exceeds enumeration ceiling");
    return from_enumeration(n, Statistic::crank);
  }
  if (n < 2)
    throw std::domain_error(
        "crank_distribution: the q-series row at n = 1 is not the crank "
        "distribution; use enumeration");
  if (n > limits.qseries_max) throw ResourceError("crank_distribution: n exceeds qseries ceiling");
  return table_from_rows(qseries::crank_rows(n), n, Statistic::crank);
}

MomentVector moments(const CountTable& table, unsigned k_max) {
  MomentVector mv;
  mv.n = table.n();
  mv.statistic = table.statistic();
  mv.raw.assign(k_max + 1, BigInt(0));
  for (const auto& [m, c] : table.counts()) {
    BigInt power = 1;
    for (unsigned k = 0; k <= k_max; ++k) {
      mv.raw[k] += power * c;
      if (k < k_max) power *= m;
    }
  }
  return mv;
}

HpReal moment_ratio(const CountTable& table, unsigned l, unsigned digits) {
  if (l < 1) throw std::domain_error("moment_ratio: l must be >= 1");
  MomentVector mv = moments(table, 2 * l);
  BigInt denom = partition_count(table.n());
  BigInt six_n = 6 * BigInt(table.n());
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), six_n.get_mpz_t(), l);
  denom *= scale;
  return hp_ratio(mv.raw[2 * l], denom, digits);
}

RescaledCdf rescaled_cdf(const CountTable& table) {
  RescaledCdf out;
  out.n = table.n();
  double scale = std::sqrt(6.0 * table.n());
  BigInt pn = partition_count(table.n());
  BigInt cumulative = 0;
  for (const auto& [m, c] : table.counts()) {
    cumulative += c;
    BigRat prob(cumulative, pn);
    prob.canonicalize();
    out.points.push_back({m, static_cast<double>(m) / scale, prob});
  }
  return out;
}

double ks_distance_to_limit(const CountTable& table) {
  RescaledCdf cdf = rescaled_cdf(table);
  double best = 0.0;
  double left = 0.0;  // CDF value just below the current breakpoint
  for (const auto& pt : cdf.points) {
    double limit = logistic_cdf(pt.x);
    double right = pt.cdf.get_d();
    best = std::max(best, std::abs(limit - left));
    best = std::max(best, std::abs(limit - right));
    left = right;
  }
  return best;
}

void write_csv(const CountTable& table, std::ostream& os) {
  os << "n,statistic,m,count\n";
  for (const auto& [m, c] : table.counts())
    os << table.n() << ',' << to_string(table.statistic()) << ',' << m << ',' << c.get_str()
       << '\n';
}

CountTable read_count_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,statistic,m,count")
    throw std::runtime_error("count table CSV: bad header");
  std::map<std::int64_t, BigInt> counts;
  std::uint32_t n = 0;
  bool have_meta = false;
  Statistic statistic = Statistic::rank;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n_str, stat_str, m_str, count_str;
    if (!std::getline(row, n_str, ',') || !std::getline(row, stat_str, ',') ||
        !std::getline(row, m_str, ',') || !std::getline(row, count_str))
      throw std::runtime_error("count table CSV: bad row: " + line);
    std::uint32_t row_n = static_cast<std::uint32_t>(std::stoul(n_str));
    Statistic row_stat = parse_statistic(stat_str);
    if (!have_meta) {
      n = row_n;
      statistic = row_stat;
      have_meta = true;
    } else if (row_n != n || row_stat != statistic) {
      throw std::runtime_error("count table CSV: mixed n or statistic");
    }
    counts[std::stoll(m_str)] = BigInt(count_str);
  }
  if (!have_meta) throw std::runtime_error("count table CSV: no rows");
  return CountTable(n, statistic, CountMethod::qseries, std::move(counts));
}

}  // namespace partlab
