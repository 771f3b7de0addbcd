#pragma once

#include "origami/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace origami {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Probability mass on a finite set of integers. Exact distributions carry
// rational masses summing to one; sampled distributions carry counts whose
// normalization sums to one within 1e-12.
struct DiscreteDistribution {
  std::vector<long long> values;      // ascending, no repeats
  std::vector<double> probs;          // parallel to values
  std::vector<Rational> exact_probs;  // empty unless exact
  std::vector<std::uint64_t> counts;  // empty unless sampled

  static DiscreteDistribution from_exact(std::vector<long long> values,
                                         std::vector<Rational> mass);
  static DiscreteDistribution from_counts(std::vector<long long> values,
                                          std::vector<std::uint64_t> counts);

  bool is_exact() const { return !exact_probs.empty(); }
  double probability(long long v) const;  // zero off the support
  double mean() const;
  double stddev() const;
  std::string to_csv() const;  // value,probability[,count]
};

enum class StatKind { VertexCount, Genus };

struct TheoreticalStats {
  double mean = 0.0;
  double stddev = 0.0;
  long long n = 0;
  StatKind kind = StatKind::VertexCount;
};

enum class PairMode { RejectDisconnected, RawPairs };

std::string pair_mode_name(PairMode mode);

struct SamplerConfig {
  int n = 1;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  PairMode mode = PairMode::RejectDisconnected;
  int workers = 1;
};

// Unsigned Stirling numbers of the first kind c(n, 1..n): the number of
// permutations of n symbols with k cycles. Bounded at 64.
std::vector<Integer> stirling_first_kind(int n);

// Cycle-count law of a uniformly random even permutation:
// P(k) = c(n, k) / |A_n| on the parity class k = n (mod 2), zero elsewhere.
DiscreteDistribution alternating_cycle_distribution(int n);

struct ExactDistributions {
  DiscreteDistribution vertex_dist;
  DiscreteDistribution genus_dist;
  Integer total_pairs;
  Integer connected_pairs;
};

// Exhaustive enumeration of all n!^2 gluing pairs, n <= 6. The vertex count
// is the commutator cycle count; genus distributions are always over the
// connected pairs, while the mode decides whether disconnected pairs stay in
// the vertex distribution (raw) or are dropped and renormalized (reject).
ExactDistributions exact_genus_distribution(int n, PairMode mode);

struct SampleResult {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  PairMode mode = PairMode::RejectDisconnected;
  int workers = 1;
  DiscreteDistribution vertex_dist;
  DiscreteDistribution genus_dist;
  // Disconnected draws: resampled under reject mode, merely counted under raw.
  std::uint64_t rejected = 0;
  double genus_mean = 0.0;
  double genus_stddev = 0.0;
};

// Monte Carlo over uniform gluing pairs. Sample index i uses its own stream
// derived from (seed, i) and worker w handles the indices congruent to w
// modulo the worker count, so the result depends on the seed alone.
SampleResult sample_genus_distribution(const SamplerConfig& cfg);

// Cycle-count statistics of a uniform permutation with the vanishing error
// terms dropped: mean log n + gamma, spread sqrt(log n) corrected one order
// down. Requires n >= 2.
TheoreticalStats theoretical_cycle_stats(long long n);

// Genus statistics of a random origami via the linear transform
// g = -E/2 + 1 + n/2 of the vertex count law. Requires n >= 2.
TheoreticalStats theoretical_genus_stats(long long n);

struct ComparisonMetrics {
  double total_variation = 0.0;
  double ks_statistic = 0.0;
};

ComparisonMetrics compare_distributions(const DiscreteDistribution& a,
                                        const DiscreteDistribution& b);

// Normal CDF through the complementary error function; absolute error is far
// below 1e-7 everywhere. Requires stddev > 0.
double normal_cdf(double x, double mean = 0.0, double stddev = 1.0);

// Kolmogorov distance between an integer-supported distribution and a normal
// law, with the half-step lattice correction: the CDF of the normal is read
// at k + 1/2 when the empirical CDF has absorbed the jump at k.
double ks_vs_normal(const DiscreteDistribution& d, double mean, double stddev);

// Summary object with the sampled moments next to the formula values and the
// distances from the even-permutation oracle and the normal law.
std::string summary_json(const SampleResult& result);

}  // namespace origami
