#include "origami/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "origami/perm.hpp"
#include "origami/rng.hpp"

namespace origami {

namespace {

void require_sorted_support(const std::vector<long long>& values) {
  if (!std::is_sorted(values.begin(), values.end()) ||
      std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("distribution support must be strictly increasing");
  }
}

}  // namespace

DiscreteDistribution DiscreteDistribution::from_exact(
    std::vector<long long> values, std::vector<Rational> mass) {
  if (values.size() != mass.size()) {
    throw std::invalid_argument("distribution support and mass sizes differ");
  }
  require_sorted_support(values);
  Rational total = 0;
  for (const Rational& m : mass) {
    if (m < 0) throw std::invalid_argument("negative probability mass");
    total += m;
  }
  if (total != 1) {
    throw std::invalid_argument("exact distribution mass does not sum to one");
  }
  DiscreteDistribution d;
  d.values = std::move(values);
  d.exact_probs = std::move(mass);
  d.probs.reserve(d.exact_probs.size());
  for (const Rational& m : d.exact_probs) d.probs.push_back(to_double(m));
  return d;
}

DiscreteDistribution DiscreteDistribution::from_counts(
    std::vector<long long> values, std::vector<std::uint64_t> counts) {
  if (values.size() != counts.size()) {
    throw std::invalid_argument("distribution support and count sizes differ");
  }
  require_sorted_support(values);
  const std::uint64_t total =
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) throw std::invalid_argument("empty sample set");
  DiscreteDistribution d;
  d.values = std::move(values);
  d.counts = std::move(counts);
  d.probs.reserve(d.counts.size());
  for (const std::uint64_t c : d.counts) {
    d.probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return d;
}

double DiscreteDistribution::probability(long long v) const {
  const auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) return 0.0;
  return probs[static_cast<std::size_t>(it - values.begin())];
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    m += static_cast<double>(values[i]) * probs[i];
  }
  return m;
}

double DiscreteDistribution::stddev() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = static_cast<double>(values[i]) - m;
    v += d * d * probs[i];
  }
  return std::sqrt(v);
}

std::string DiscreteDistribution::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  const bool with_counts = !counts.empty();
  out << (with_counts ? "value,probability,count\n" : "value,probability\n");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << values[i] << ',' << probs[i];
    if (with_counts) out << ',' << counts[i];
    out << '\n';
  }
  return out.str();
}

std::string pair_mode_name(PairMode mode) {
  return mode == PairMode::RejectDisconnected ? "reject-disconnected"
                                              : "raw-pairs";
}

std::vector<Integer> stirling_first_kind(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("stirling_first_kind supports 1 <= n <= 64");
  }
  std::vector<Integer> row = {1};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
      Integer v = 0;
      if (k >= 2) v += row[static_cast<std::size_t>(k - 2)];
      if (k <= m - 1) v += (m - 1) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k - 1)] = v;
    }
    row = std::move(next);
  }
  return row;
}

DiscreteDistribution alternating_cycle_distribution(int n) {
  const std::vector<Integer> row = stirling_first_kind(n);
  const Integer group = n == 1 ? Integer(1) : factorial(n) / 2;
  std::vector<long long> values;
  std::vector<Rational> mass;
  for (int k = 1; k <= n; ++k) {
    values.push_back(k);
    const bool even = (n - k) % 2 == 0;
    mass.push_back(even ? Rational(row[static_cast<std::size_t>(k - 1)], group)
                        : Rational(0));
  }
  return DiscreteDistribution::from_exact(std::move(values), std::move(mass));
}

namespace {

DiscreteDistribution exact_from_histogram(const std::map<long long, Integer>& h,
                                          const Integer& denom) {
  std::vector<long long> values;
  std::vector<Rational> mass;
  for (const auto& [v, c] : h) {
    values.push_back(v);
    mass.push_back(Rational(c, denom));
  }
  return DiscreteDistribution::from_exact(std::move(values), std::move(mass));
}

DiscreteDistribution counts_from_histogram(
    const std::map<long long, std::uint64_t>& h) {
  std::vector<long long> values;
  std::vector<std::uint64_t> counts;
  for (const auto& [v, c] : h) {
    values.push_back(v);
    counts.push_back(c);
  }
  return DiscreteDistribution::from_counts(std::move(values), std::move(counts));
}

}  // namespace

ExactDistributions exact_genus_distribution(int n, PairMode mode) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument(
        "exact enumeration of the n!^2 pairs is limited to n <= 6; got " +
        std::to_string(n));
  }
  std::map<long long, Integer> vertex_hist;
  std::map<long long, Integer> genus_hist;
  Integer connected = 0;
  const Integer total = factorial(n) * factorial(n);

  std::vector<int> img_a(static_cast<std::size_t>(n));
  std::iota(img_a.begin(), img_a.end(), 1);
  do {
    const Permutation a = Permutation::from_images(img_a);
    std::vector<int> img_b(static_cast<std::size_t>(n));
    std::iota(img_b.begin(), img_b.end(), 1);
    do {
      const Permutation b = Permutation::from_images(img_b);
      const int e = cycle_count(commutator(a, b));
      const std::array<Permutation, 2> gens = {a, b};
      const bool conn = is_transitive(gens, n);
      if (conn) {
        ++connected;
        genus_hist[(2 - e + n) / 2] += 1;
      }
      if (conn || mode == PairMode::RawPairs) vertex_hist[e] += 1;
    } while (std::next_permutation(img_b.begin(), img_b.end()));
  } while (std::next_permutation(img_a.begin(), img_a.end()));

  ExactDistributions out;
  out.total_pairs = total;
  out.connected_pairs = connected;
  out.vertex_dist = exact_from_histogram(
      vertex_hist, mode == PairMode::RawPairs ? total : connected);
  out.genus_dist = exact_from_histogram(genus_hist, connected);
  return out;
}

SampleResult sample_genus_distribution(const SamplerConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("sampler needs n >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("sampler needs samples >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("sampler needs workers >= 1");

  struct Shard {
    std::map<long long, std::uint64_t> vertex_hist;
    std::map<long long, std::uint64_t> genus_hist;
    std::uint64_t rejected = 0;
  };
  std::vector<Shard> shards(static_cast<std::size_t>(cfg.workers));

  const auto run = [&cfg](Shard& shard, std::uint64_t first) {
    for (std::uint64_t i = first; i < cfg.samples;
         i += static_cast<std::uint64_t>(cfg.workers)) {
      auto eng = make_stream(cfg.seed, i);
      Permutation a = random_permutation(cfg.n, eng);
      Permutation b = random_permutation(cfg.n, eng);
      std::array<Permutation, 2> gens = {a, b};
      bool conn = is_transitive(gens, cfg.n);
      if (cfg.mode == PairMode::RejectDisconnected) {
        while (!conn) {
          ++shard.rejected;
          a = random_permutation(cfg.n, eng);
          b = random_permutation(cfg.n, eng);
          gens = {a, b};
          conn = is_transitive(gens, cfg.n);
        }
      } else if (!conn) {
        ++shard.rejected;
      }
      const int e = cycle_count(commutator(a, b));
      if (conn || cfg.mode == PairMode::RawPairs) ++shard.vertex_hist[e];
      if (conn) ++shard.genus_hist[(2 - e + cfg.n) / 2];
    }
  };

  if (cfg.workers == 1) {
    run(shards[0], 0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(shards.size());
    for (std::size_t w = 0; w < shards.size(); ++w) {
      pool.emplace_back(run, std::ref(shards[w]), static_cast<std::uint64_t>(w));
    }
    for (auto& t : pool) t.join();
  }

  std::map<long long, std::uint64_t> vertex_hist;
  std::map<long long, std::uint64_t> genus_hist;
  std::uint64_t rejected = 0;
  for (const Shard& s : shards) {
    for (const auto& [v, c] : s.vertex_hist) vertex_hist[v] += c;
    for (const auto& [v, c] : s.genus_hist) genus_hist[v] += c;
    rejected += s.rejected;
  }

  SampleResult res;
  res.n = cfg.n;
  res.samples = cfg.samples;
  res.seed = cfg.seed;
  res.mode = cfg.mode;
  res.workers = cfg.workers;
  res.rejected = rejected;
  res.vertex_dist = counts_from_histogram(vertex_hist);
  res.genus_dist = counts_from_histogram(genus_hist);
  res.genus_mean = res.genus_dist.mean();
  res.genus_stddev = res.genus_dist.stddev();
  return res;
}

TheoreticalStats theoretical_cycle_stats(long long n) {
  if (n < 2) throw std::invalid_argument("cycle statistics need n >= 2");
  const double u = std::log(static_cast<double>(n));
  TheoreticalStats s;
  s.n = n;
  s.kind = StatKind::VertexCount;
  s.mean = u + euler_gamma;
  // pi^2/12 - gamma/2, the second-order term of the spread.
  constexpr double correction = 0.8224670334241132 - 0.28860783245076643;
  s.stddev = std::sqrt(u) - correction / std::sqrt(u);
  return s;
}

TheoreticalStats theoretical_genus_stats(long long n) {
  const TheoreticalStats cycles = theoretical_cycle_stats(n);
  TheoreticalStats s;
  s.n = n;
  s.kind = StatKind::Genus;
  s.mean = -cycles.mean / 2.0 + 1.0 + static_cast<double>(n) / 2.0;
  s.stddev = cycles.stddev / 2.0;
  return s;
}

ComparisonMetrics compare_distributions(const DiscreteDistribution& a,
                                        const DiscreteDistribution& b) {
  std::vector<long long> support;
  std::set_union(a.values.begin(), a.values.end(), b.values.begin(),
                 b.values.end(), std::back_inserter(support));
  ComparisonMetrics m;
  double sum_abs = 0.0;
  double cdf_a = 0.0;
  double cdf_b = 0.0;
  for (const long long v : support) {
    const double pa = a.probability(v);
    const double pb = b.probability(v);
    sum_abs += std::abs(pa - pb);
    cdf_a += pa;
    cdf_b += pb;
    m.ks_statistic = std::max(m.ks_statistic, std::abs(cdf_a - cdf_b));
  }
  m.total_variation = sum_abs / 2.0;
  return m;
}

double normal_cdf(double x, double mean, double stddev) {
  if (stddev <= 0.0) throw std::invalid_argument("normal_cdf needs stddev > 0");
  return 0.5 * std::erfc(-(x - mean) / (stddev * std::sqrt(2.0)));
}

double ks_vs_normal(const DiscreteDistribution& d, double mean, double stddev) {
  if (stddev <= 0.0) throw std::invalid_argument("ks_vs_normal needs stddev > 0");
  double cum = 0.0;
  double ks = 0.0;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const double v = static_cast<double>(d.values[i]);
    ks = std::max(ks, std::abs(cum - normal_cdf(v - 0.5, mean, stddev)));
    cum += d.probs[i];
    ks = std::max(ks, std::abs(cum - normal_cdf(v + 0.5, mean, stddev)));
  }
  return ks;
}

std::string summary_json(const SampleResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  j["mode"] = pair_mode_name(result.mode);
  j["samples"] = result.samples;
  j["seed"] = result.seed;
  j["rejected"] = result.rejected;
  j["mean"] = result.genus_mean;
  j["stddev"] = result.genus_stddev;
  if (result.n >= 2) {
    const TheoreticalStats g = theoretical_genus_stats(result.n);
    j["theoretical_mean"] = g.mean;
    j["theoretical_stddev"] = g.stddev;
    j["ks_vs_normal"] = ks_vs_normal(result.genus_dist, g.mean, g.stddev);
  } else {
    j["theoretical_mean"] = nullptr;
    j["theoretical_stddev"] = nullptr;
    j["ks_vs_normal"] = nullptr;
  }
  if (result.n <= 64) {
    j["tv_vs_oracle"] =
        compare_distributions(result.vertex_dist, alternating_cycle_distribution(result.n))
            .total_variation;
  } else {
    j["tv_vs_oracle"] = nullptr;
  }
  return j.dump();
}

}  // namespace origami
