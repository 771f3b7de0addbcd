#include "origami/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "origami/distribution.hpp"
#include "origami/numeric.hpp"
#include "origami/origami.hpp"
#include "origami/partition.hpp"
#include "origami/perm.hpp"
#include "origami/rng.hpp"
#include "origami/wreath.hpp"
#include "origami/wreath_chars.hpp"
#include "origami/young.hpp"

namespace origami {

namespace {

using Check = std::function<std::optional<std::string>()>;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::vector<int> adjacent_word(const Permutation& p) {
  std::vector<int> v = p.images();
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
    }
  }
  return word;
}

RationalMatrix rational_identity(std::size_t d) {
  RationalMatrix m(d, std::vector<Rational>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix rational_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t d = a.size();
  RationalMatrix c(d, std::vector<Rational>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// Trace of the seminormal representation at any permutation of type rho; the
// word orientation is irrelevant because traces are class functions and the
// inverse has the same cycle type.
Rational seminormal_trace(const Partition& lambda, const Partition& rho) {
  RationalMatrix m = rational_identity(static_cast<std::size_t>(
      static_cast<long long>(f_lambda(lambda))));
  for (const int r : adjacent_word(permutation_of_type(rho))) {
    m = rational_product(m, young_seminormal_matrix(lambda, r));
  }
  Rational tr = 0;
  for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
  return tr;
}

std::optional<std::string> trace_oracle_check(bool inject_fault) {
  CharacterTable t = character_table(5);
  if (inject_fault) t.values[2][1] += 1;
  for (std::size_t li = 0; li < t.labels.size(); ++li) {
    for (std::size_t ci = 0; ci < t.labels.size(); ++ci) {
      const Rational tr = seminormal_trace(t.labels[li], t.labels[ci]);
      if (tr != Rational(t.values[li][ci])) {
        return "chartable cell ([" + partition_to_string(t.labels[li]) +
               "], class " + partition_to_string(t.labels[ci]) +
               ") disagrees with the representation trace: table " +
               t.values[li][ci].str() + ", trace " + to_string(tr);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> orthogonality_check(int n) {
  const CharacterTable t = character_table(n);
  const Integer order = factorial(n);
  for (std::size_t a = 0; a < t.labels.size(); ++a) {
    for (std::size_t b = a; b < t.labels.size(); ++b) {
      Integer dot = 0;
      for (std::size_t c = 0; c < t.labels.size(); ++c) {
        dot += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
      }
      const Integer expect = a == b ? order : Integer(0);
      if (dot != expect) {
        return "rows [" + partition_to_string(t.labels[a]) + "] and [" +
               partition_to_string(t.labels[b]) + "] give inner product " +
               dot.str() + ", expected " + expect.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> dimension_square_check(int n) {
  Integer total = 0;
  for (const Partition& lambda : partitions(n)) {
    const Integer f = f_lambda(lambda);
    total += f * f;
  }
  if (total != factorial(n)) {
    return "sum of squared dimensions is " + total.str() + ", expected " +
           factorial(n).str();
  }
  return std::nullopt;
}

std::optional<std::string> tableaux_check(int n) {
  for (const Partition& lambda : partitions(n)) {
    const auto tabs = standard_tableaux(lambda);
    if (Integer(tabs.size()) != f_lambda(lambda)) {
      return "shape [" + partition_to_string(lambda) + "] lists " +
             std::to_string(tabs.size()) + " tableaux against dimension " +
             f_lambda(lambda).str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> wreath_orthonormality_check(int n) {
  const C4WreathSystem sys = irreducible_system(n, TableMode::Full);
  const std::size_t k = sys.irreps().size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      GaussianRational dot;
      for (std::size_t c = 0; c < sys.class_count(); ++c) {
        dot += sys.value(a, c) * sys.value(b, c).conj() *
               Rational(sys.class_sizes()[c]);
      }
      const GaussianRational expect =
          a == b ? GaussianRational{Rational(sys.order()), 0} : GaussianRational{};
      if (!(dot == expect)) {
        return "irreps " + sys.irreps()[a].label() + " and " +
               sys.irreps()[b].label() + " give inner product " + dot.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> dual_genus_check(int exhaustive_n, int random_n,
                                            int trials) {
  std::vector<int> img_a(static_cast<std::size_t>(exhaustive_n));
  std::iota(img_a.begin(), img_a.end(), 1);
  do {
    std::vector<int> img_b(static_cast<std::size_t>(exhaustive_n));
    std::iota(img_b.begin(), img_b.end(), 1);
    do {
      const Origami o =
          make_origami(exhaustive_n, Permutation::from_images(img_a),
                       Permutation::from_images(img_b), true);
      if (static_cast<int>(vertex_orbits(o).size()) != vertex_count_commutator(o)) {
        return "orbit and commutator counts differ for " + format_origami_text(o);
      }
    } while (std::next_permutation(img_b.begin(), img_b.end()));
  } while (std::next_permutation(img_a.begin(), img_a.end()));

  auto eng = make_stream(7, 0);
  for (int i = 0; i < trials; ++i) {
    const Origami o = make_origami(random_n, random_permutation(random_n, eng),
                                   random_permutation(random_n, eng), true);
    if (static_cast<int>(vertex_orbits(o).size()) != vertex_count_commutator(o)) {
      return "orbit and commutator counts differ for " + format_origami_text(o);
    }
  }
  return std::nullopt;
}

std::optional<std::string> reduction_identity_check(int n) {
  const C4WreathSystem sys = irreducible_system(n, TableMode::Full);
  const Permutation target = parse_cycles("(1 4 3 2)", 4);
  int compared = 0;
  for (const WreathElement& rep : sys.class_reps()) {
    if (rep.top != target) continue;
    ++compared;
    const Permutation pi_prime = cycle_products(rep)[0].product;
    const Rational collapsed = reduced_probability(pi_prime);
    const Rational full = sigma_tau_probability(rep, sys);
    if (collapsed != full) {
      return "class of " + format_wreath(rep) + " gives " + to_string(full) +
             " from the full sum but " + to_string(collapsed) +
             " from the reduction";
    }
  }
  if (compared == 0) return "no class representative has the expected top";
  return std::nullopt;
}

std::optional<std::string> refined_split_check(int n) {
  for (const Partition& rho : partitions(n)) {
    const RefinedProbability split = refined_probability(n, rho);
    if (split.total() != reduced_probability(n, rho)) {
      return "type " + partition_to_string(rho) +
             " does not reconstruct: leading " + to_string(split.leading) +
             " + remainder " + to_string(split.remainder) + " != " +
             to_string(reduced_probability(n, rho));
    }
  }
  return std::nullopt;
}

std::optional<std::string> bound_check(int n) {
  for (const BoundCheck& b : check_character_bounds(n)) {
    if (b.violations != 0) {
      return b.name + " violated " + std::to_string(b.violations) +
             " times, worst at ([" + partition_to_string(b.witness_lambda) +
             "], class " + partition_to_string(b.witness_class) + ") ratio " +
             std::to_string(b.max_ratio);
    }
  }
  return std::nullopt;
}

std::optional<std::string> sampler_determinism_check() {
  SamplerConfig cfg;
  cfg.n = 8;
  cfg.samples = 2000;
  cfg.seed = 1;
  cfg.workers = 1;
  const SampleResult a = sample_genus_distribution(cfg);
  cfg.workers = 3;
  const SampleResult b = sample_genus_distribution(cfg);
  if (a.vertex_dist.counts != b.vertex_dist.counts ||
      a.genus_dist.counts != b.genus_dist.counts || a.rejected != b.rejected) {
    return "1 worker and 3 workers disagree at seed 1";
  }
  return std::nullopt;
}

std::optional<std::string> frobenius_sn_check(int n) {
  const CharacterTable t = character_table(n);
  std::map<Partition, std::vector<Permutation>> classes;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    const Permutation p = Permutation::from_images(img);
    classes[cycle_type(p)].push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));

  for (const Partition& c1 : t.labels) {
    for (const Partition& c2 : t.labels) {
      for (const Partition& zc : t.labels) {
        const Permutation z = permutation_of_type(zc);
        Integer brute = 0;
        for (const Permutation& x : classes[c1]) {
          if (cycle_type(compose(inverse(x), z)) == c2) ++brute;
        }
        const Integer formula = frobenius_count(t, c1, c2, z);
        if (brute != formula) {
          return "classes (" + partition_to_string(c1) + ", " +
                 partition_to_string(c2) + ", " + partition_to_string(zc) +
                 "): counted " + brute.str() + ", formula " + formula.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> frobenius_wreath_check() {
  const C4WreathSystem sys = irreducible_system(2, TableMode::Full);
  std::vector<std::vector<WreathElement>> classes(sys.class_count());
  for (const WreathElement& e : enumerate_wreath(sys.top(), 2)) {
    classes[sys.class_index(e)].push_back(e);
  }
  for (std::size_t c1 = 0; c1 < sys.class_count(); ++c1) {
    for (std::size_t c2 = 0; c2 < sys.class_count(); ++c2) {
      for (std::size_t zc = 0; zc < sys.class_count(); ++zc) {
        const WreathElement& z = sys.class_reps()[zc];
        Integer brute = 0;
        for (const WreathElement& x : classes[c1]) {
          if (sys.class_index(w_multiply(w_inverse(x), z)) == c2) ++brute;
        }
        const Integer formula = frobenius_count(sys, c1, c2, z);
        if (brute != formula) {
          return "classes (" + std::to_string(c1) + ", " + std::to_string(c2) +
                 ", " + std::to_string(zc) + "): counted " + brute.str() +
                 ", formula " + formula.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> vertex_law_formula_check(int n) {
  const ExactDistributions raw = exact_genus_distribution(n, PairMode::RawPairs);
  std::map<long long, Rational> by_cycles;
  for (const Partition& rho : partitions(n)) {
    by_cycles[static_cast<long long>(rho.rows())] +=
        factorial(n) * factorial(n) * factorial(n) * sn_class_size(n, rho) *
        reduced_probability(n, rho);
  }
  for (std::size_t i = 0; i < raw.vertex_dist.values.size(); ++i) {
    if (by_cycles[raw.vertex_dist.values[i]] != raw.vertex_dist.exact_probs[i]) {
      return "cycle count " + std::to_string(raw.vertex_dist.values[i]) +
             ": enumeration and character formula disagree";
    }
  }
  return std::nullopt;
}

std::optional<std::string> sampling_agreement_check() {
  SamplerConfig cfg;
  cfg.n = 5;
  cfg.samples = 100000;
  cfg.seed = 11;
  cfg.workers = 4;
  const SampleResult res = sample_genus_distribution(cfg);
  const ExactDistributions ex =
      exact_genus_distribution(5, PairMode::RejectDisconnected);
  const double tv =
      compare_distributions(res.genus_dist, ex.genus_dist).total_variation;
  if (tv >= 0.02) {
    return "genus TV between exact and sampled is " + std::to_string(tv);
  }
  return std::nullopt;
}

std::optional<std::string> harmonic_check() {
  double h = 0.0;
  for (int i = 1; i <= 10000; ++i) h += 1.0 / i;
  const double diff = std::abs(theoretical_cycle_stats(10000).mean - h);
  if (diff >= 0.01) {
    return "formula mean differs from the harmonic number by " +
           std::to_string(diff);
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<std::pair<std::string, Check>> checks;
  const bool fault = opts.inject_fault;
  checks.emplace_back("character values match representation traces (n=5)",
                      [fault] { return trace_oracle_check(fault); });
  checks.emplace_back("character table row orthogonality (n=8)",
                      [] { return orthogonality_check(8); });
  checks.emplace_back("squared dimensions sum to the group order (n=10)",
                      [] { return dimension_square_check(10); });
  checks.emplace_back("standard tableaux counts match dimensions (n=7)",
                      [] { return tableaux_check(7); });
  checks.emplace_back("wreath character table orthonormality (n=2)",
                      [] { return wreath_orthonormality_check(2); });
  checks.emplace_back("vertex count dual method (exhaustive n=3, random n=40)",
                      [] { return dual_genus_check(3, 40, 300); });
  checks.emplace_back("probability reduction against the full wreath sum (n=2)",
                      [] { return reduction_identity_check(2); });
  checks.emplace_back("refined split reconstructs the reduced probability (n=5)",
                      [] { return refined_split_check(5); });
  checks.emplace_back("character bounds (n=6)", [] { return bound_check(6); });
  checks.emplace_back("sampler worker independence (n=8)",
                      [] { return sampler_determinism_check(); });

  if (opts.level == VerifyLevel::Full) {
    checks.emplace_back("character table row orthogonality (n=10)",
                        [] { return orthogonality_check(10); });
    checks.emplace_back("wreath character table orthonormality (n=3)",
                        [] { return wreath_orthonormality_check(3); });
    checks.emplace_back("frobenius counts against enumeration (S4)",
                        [] { return frobenius_sn_check(4); });
    checks.emplace_back("frobenius counts against enumeration (C4 wr S2)",
                        [] { return frobenius_wreath_check(); });
    checks.emplace_back("vertex count dual method (exhaustive n=4)",
                        [] { return dual_genus_check(4, 50, 200); });
    checks.emplace_back("probability reduction against the full wreath sum (n=3)",
                        [] { return reduction_identity_check(3); });
    checks.emplace_back(
        "refined split reconstructs the reduced probability (n=6..8)", [] {
          for (const int n : {6, 7, 8}) {
            if (auto err = refined_split_check(n)) return err;
          }
          return std::optional<std::string>{};
        });
    checks.emplace_back("character bounds (n=4, n=8)", [] {
      if (auto err = bound_check(4)) return err;
      return bound_check(8);
    });
    checks.emplace_back("vertex law against the character formula (n=4)",
                        [] { return vertex_law_formula_check(4); });
    checks.emplace_back("sampled distribution against exhaustive law (n=5)",
                        [] { return sampling_agreement_check(); });
    checks.emplace_back("cycle statistics against the harmonic oracle",
                        [] { return harmonic_check(); });
  }

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (auto& [name, body] : checks) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    const std::optional<std::string> err = body();
    const auto stop = std::chrono::steady_clock::now();
    r.millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    r.passed = !err.has_value();
    if (err) r.message = *err;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

std::string verification_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "[ ok ] " : "[FAIL] ") << r.name << " ("
        << static_cast<long long>(r.millis + 0.5) << " ms)";
    if (!r.passed) {
      out << "\n       " << r.message;
      ++failed;
    }
    out << '\n';
  }
  out << (results.size() - failed) << '/' << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace origami
