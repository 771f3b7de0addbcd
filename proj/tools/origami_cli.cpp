#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "origami/distribution.hpp"
#include "origami/numeric.hpp"
#include "origami/origami.hpp"
#include "origami/partition.hpp"
#include "origami/perm.hpp"
#include "origami/verify.hpp"
#include "origami/wreath.hpp"
#include "origami/wreath_chars.hpp"
#include "origami/young.hpp"

namespace {

using namespace origami;
using nlohmann::json;

// 0 success, 1 verification failure, 2 usage or bounds, 3 domain errors
// (disconnected input).
constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct OrigamiArgs {
  int n = 0;
  std::string sigma_a;
  std::string sigma_b;
  std::string input;

  void attach(CLI::App* cmd, const std::string& which = "") {
    const std::string suffix = which.empty() ? "" : which;
    cmd->add_option("--n" + suffix, n, "number of squares");
    cmd->add_option("--sigma-a" + suffix, sigma_a,
                    "right-neighbour gluing in cycle notation");
    cmd->add_option("--sigma-b" + suffix, sigma_b,
                    "upper-neighbour gluing in cycle notation");
    cmd->add_option("--input" + suffix, input,
                    "origami file, three-line text or JSON");
  }

  Origami build() const {
    if (!input.empty()) {
      const std::string text = read_file(input);
      const auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') {
        return parse_origami_json(text);
      }
      return parse_origami_text(text);
    }
    if (n <= 0 || sigma_a.empty() || sigma_b.empty()) {
      throw std::invalid_argument(
          "need either --input or all of --n, --sigma-a, --sigma-b");
    }
    return make_origami(n, parse_cycles(sigma_a, n), parse_cycles(sigma_b, n));
  }
};

std::string rational_text(const Rational& r) { return to_string(r); }

json origami_json(const Origami& o) {
  json j;
  j["n"] = o.n;
  j["sigma_a"] = format_cycles(o.sigma_a);
  j["sigma_b"] = format_cycles(o.sigma_b);
  return j;
}

int run_genus(const OrigamiArgs& args, bool with_orbits,
              const std::string& format, const std::string& output) {
  const Origami o = args.build();
  const SurfaceInvariants inv = surface_invariants(o);
  std::vector<std::size_t> orbit_sizes;
  if (with_orbits) {
    for (const auto& orbit : vertex_orbits(o)) orbit_sizes.push_back(orbit.size());
  }
  std::string text;
  if (format == "csv") {
    std::ostringstream out;
    out << "key,value\n";
    out << "n," << o.n << '\n';
    out << "sigma_a," << format_cycles(o.sigma_a) << '\n';
    out << "sigma_b," << format_cycles(o.sigma_b) << '\n';
    out << "vertices," << inv.vertices << '\n';
    out << "edges," << inv.edges << '\n';
    out << "faces," << inv.faces << '\n';
    out << "euler," << inv.euler << '\n';
    out << "genus," << inv.genus << '\n';
    for (const std::size_t s : orbit_sizes) out << "orbit_size," << s << '\n';
    text = out.str();
  } else {
    json j = origami_json(o);
    j["vertices"] = static_cast<long long>(inv.vertices);
    j["edges"] = static_cast<long long>(inv.edges);
    j["faces"] = static_cast<long long>(inv.faces);
    j["euler"] = static_cast<long long>(inv.euler);
    j["genus"] = static_cast<long long>(inv.genus);
    if (with_orbits) j["orbit_sizes"] = orbit_sizes;
    text = j.dump() + "\n";
  }
  write_output(text, output);
  return exit_ok;
}

int run_orbits(const OrigamiArgs& args, const std::string& format,
               const std::string& output) {
  const Origami o = args.build();
  const auto orbits = vertex_orbits(o);
  std::string text;
  if (format == "csv") {
    std::ostringstream out;
    out << "orbit,slot,square\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (const auto& [slot, square] : orbits[i]) {
        out << i << ',' << slot << ',' << square << '\n';
      }
    }
    text = out.str();
  } else {
    json j = origami_json(o);
    json arr = json::array();
    json sizes = json::array();
    for (const auto& orbit : orbits) {
      json one = json::array();
      for (const auto& [slot, square] : orbit) {
        one.push_back(json::array({slot, square}));
      }
      sizes.push_back(orbit.size());
      arr.push_back(std::move(one));
    }
    j["orbits"] = std::move(arr);
    j["orbit_sizes"] = std::move(sizes);
    text = j.dump() + "\n";
  }
  write_output(text, output);
  return exit_ok;
}

int run_chartable(int n, const std::string& format, const std::string& output) {
  const CharacterTable t = character_table(n);
  write_output(format == "json" ? t.to_json() + "\n" : t.to_csv(), output);
  return exit_ok;
}

int run_wreath_chartable(int n, bool diagonal, const std::string& format,
                         const std::string& output) {
  const C4WreathSystem sys =
      irreducible_system(n, diagonal ? TableMode::DiagonalOnly : TableMode::Full);
  write_output(format == "json" ? sys.to_json() + "\n" : sys.to_csv(), output);
  return exit_ok;
}

int run_frobenius(const std::string& group, int n, const std::string& c1,
                  const std::string& c2, const std::string& z,
                  const std::string& output) {
  json j;
  j["group"] = group;
  j["n"] = n;
  j["c1"] = c1;
  j["c2"] = c2;
  j["z"] = z;
  if (group == "sn") {
    const CharacterTable t = character_table(n);
    const Partition p1 = parse_partition(c1);
    const Partition p2 = parse_partition(c2);
    const Partition pz = parse_partition(z);
    j["count"] =
        frobenius_count(t, p1, p2, permutation_of_type(pz)).str();
  } else if (group == "wreath") {
    const C4WreathSystem sys = irreducible_system(n, TableMode::Full);
    const auto parse_index = [&sys](const std::string& text) {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(text, &pos);
      if (pos != text.size() || v >= sys.class_count()) {
        throw std::invalid_argument("class index out of range: " + text);
      }
      return static_cast<std::size_t>(v);
    };
    const std::size_t i1 = parse_index(c1);
    const std::size_t i2 = parse_index(c2);
    const std::size_t iz = parse_index(z);
    j["count"] = frobenius_count(sys, i1, i2, sys.class_reps()[iz]).str();
  } else {
    throw std::invalid_argument("unknown group: " + group);
  }
  write_output(j.dump() + "\n", output);
  return exit_ok;
}

int run_prob(int n, const std::string& type, bool full,
             const std::string& output) {
  const Partition rho = parse_partition(type);
  json j;
  j["n"] = n;
  j["type"] = partition_to_string(rho);
  j["reduced"] = rational_text(reduced_probability(n, rho));
  if (n >= 4) {
    const RefinedProbability split = refined_probability(n, rho);
    j["leading"] = rational_text(split.leading);
    j["remainder"] = rational_text(split.remainder);
  } else {
    j["leading"] = nullptr;
    j["remainder"] = nullptr;
  }
  if (full) {
    const C4WreathSystem sys = irreducible_system(n, TableMode::Full);
    std::vector<Permutation> bottom(4, Permutation::identity(n));
    bottom[0] = permutation_of_type(rho);
    const WreathElement pi{parse_cycles("(1 4 3 2)", 4), std::move(bottom)};
    j["full_sum"] = rational_text(sigma_tau_probability(pi, sys));
  }
  write_output(j.dump() + "\n", output);
  return exit_ok;
}

json exact_summary(int n, PairMode mode, const ExactDistributions& ex) {
  json j;
  j["n"] = n;
  j["mode"] = pair_mode_name(mode);
  j["exact"] = true;
  j["total_pairs"] = ex.total_pairs.str();
  j["connected_pairs"] = ex.connected_pairs.str();
  j["mean"] = ex.genus_dist.mean();
  j["stddev"] = ex.genus_dist.stddev();
  if (n >= 2) {
    const TheoreticalStats g = theoretical_genus_stats(n);
    j["theoretical_mean"] = g.mean;
    j["theoretical_stddev"] = g.stddev;
    j["ks_vs_normal"] = ks_vs_normal(ex.genus_dist, g.mean, g.stddev);
  } else {
    j["theoretical_mean"] = nullptr;
    j["theoretical_stddev"] = nullptr;
    j["ks_vs_normal"] = nullptr;
  }
  j["tv_vs_oracle"] =
      compare_distributions(ex.vertex_dist, alternating_cycle_distribution(n))
          .total_variation;
  return j;
}

int run_dist(int n, bool exact, std::uint64_t samples, std::uint64_t seed,
             int workers, const std::string& mode_name,
             const std::string& output) {
  const PairMode mode = mode_name == "raw" ? PairMode::RawPairs
                                           : PairMode::RejectDisconnected;
  std::ostringstream out;
  if (exact) {
    const ExactDistributions ex = exact_genus_distribution(n, mode);
    out << "# vertex distribution\n" << ex.vertex_dist.to_csv();
    out << "# genus distribution\n" << ex.genus_dist.to_csv();
    out << "# summary\n" << exact_summary(n, mode, ex).dump() << '\n';
  } else {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.mode = mode;
    cfg.workers = workers;
    const SampleResult res = sample_genus_distribution(cfg);
    out << "# vertex distribution\n" << res.vertex_dist.to_csv();
    out << "# genus distribution\n" << res.genus_dist.to_csv();
    out << "# summary\n" << summary_json(res) << '\n';
  }
  write_output(out.str(), output);
  return exit_ok;
}

int run_equiv(const OrigamiArgs& first, const OrigamiArgs& second,
              const std::string& output) {
  const Origami a = first.build();
  const Origami b = second.build();
  json j;
  j["first"] = origami_json(a);
  j["second"] = origami_json(b);
  j["equivalent"] = are_equivalent(a, b);
  write_output(j.dump() + "\n", output);
  return exit_ok;
}

int run_verify(const std::string& level, bool inject_fault,
               const std::string& format, const std::string& output) {
  VerifyOptions opts;
  opts.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  opts.inject_fault = inject_fault;
  const auto results = run_verification(opts);
  if (format == "json") {
    json arr = json::array();
    for (const CheckResult& r : results) {
      json one;
      one["name"] = r.name;
      one["passed"] = r.passed;
      one["millis"] = r.millis;
      if (!r.passed) one["message"] = r.message;
      arr.push_back(std::move(one));
    }
    write_output(arr.dump() + "\n", output);
  } else {
    write_output(verification_report(results), output);
  }
  return all_passed(results) ? exit_ok : exit_verify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "square-tiled surfaces: genus, character tables, gluing probabilities, "
      "genus distributions"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "surface invariants of an origami");
  OrigamiArgs genus_args;
  genus_args.attach(genus_cmd);
  bool genus_orbits = false;
  std::string genus_format = "json";
  std::string genus_output;
  genus_cmd->add_flag("--orbits", genus_orbits, "include per-vertex orbit sizes");
  add_format(genus_cmd, genus_format);
  genus_cmd->add_option("--output", genus_output, "write to file instead of stdout");

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "vertex orbits on (slot, square) pairs");
  OrigamiArgs orbits_args;
  orbits_args.attach(orbits_cmd);
  std::string orbits_format = "json";
  std::string orbits_output;
  add_format(orbits_cmd, orbits_format);
  orbits_cmd->add_option("--output", orbits_output, "write to file instead of stdout");

  // chartable
  auto* chartable_cmd = app.add_subcommand("chartable", "character table of S_n");
  int chartable_n = 0;
  std::string chartable_format = "csv";
  std::string chartable_output;
  chartable_cmd->add_option("--n", chartable_n, "symbols")->required();
  add_format(chartable_cmd, chartable_format);
  chartable_cmd->add_option("--output", chartable_output, "write to file instead of stdout");

  // wreath-chartable
  auto* wreath_cmd =
      app.add_subcommand("wreath-chartable", "irreducible system of C4 wr S_n");
  int wreath_n = 0;
  bool wreath_diagonal = false;
  std::string wreath_format = "csv";
  std::string wreath_output;
  wreath_cmd->add_option("--n", wreath_n, "bottom symbols")->required();
  wreath_cmd->add_flag("--diagonal", wreath_diagonal,
                       "diagonal-base irreps only, no class data (n <= 15)");
  add_format(wreath_cmd, wreath_format);
  wreath_cmd->add_option("--output", wreath_output, "write to file instead of stdout");

  // frobenius
  auto* frob_cmd =
      app.add_subcommand("frobenius", "count solutions of g1 g2 = z by classes");
  std::string frob_group = "sn";
  int frob_n = 0;
  std::string frob_c1, frob_c2, frob_z, frob_output;
  frob_cmd->add_option("--group", frob_group, "sn or wreath")
      ->check(CLI::IsMember({"sn", "wreath"}));
  frob_cmd->add_option("--n", frob_n, "symbols")->required();
  frob_cmd->add_option("--c1", frob_c1, "first class: partition for sn, index for wreath")
      ->required();
  frob_cmd->add_option("--c2", frob_c2, "second class")->required();
  frob_cmd->add_option("--z", frob_z, "target class")->required();
  frob_cmd->add_option("--output", frob_output, "write to file instead of stdout");

  // prob
  auto* prob_cmd = app.add_subcommand(
      "prob", "commutator probabilities from the character reduction");
  int prob_n = 0;
  std::string prob_type, prob_output;
  bool prob_full = false;
  prob_cmd->add_option("--n", prob_n, "symbols")->required();
  prob_cmd->add_option("--type", prob_type, "cycle type, e.g. 3+1+1")->required();
  prob_cmd->add_flag("--full", prob_full,
                     "cross-check against the full wreath sum (n <= 3)");
  prob_cmd->add_option("--output", prob_output, "write to file instead of stdout");

  // dist
  auto* dist_cmd =
      app.add_subcommand("dist", "vertex and genus distributions of random origamis");
  int dist_n = 0;
  bool dist_exact = false;
  std::uint64_t dist_samples = 100000;
  std::uint64_t dist_seed = 0;
  int dist_workers = 1;
  std::string dist_mode = "reject";
  std::string dist_output;
  dist_cmd->add_option("--n", dist_n, "squares")->required();
  auto* exact_flag =
      dist_cmd->add_flag("--exact", dist_exact, "exhaustive enumeration, n <= 6");
  dist_cmd->add_option("--samples", dist_samples, "Monte Carlo sample count")
      ->excludes(exact_flag);
  dist_cmd->add_option("--seed", dist_seed, "sampling seed");
  dist_cmd->add_option("--workers", dist_workers, "sampling threads");
  dist_cmd->add_option("--mode", dist_mode, "disconnected pair handling")
      ->check(CLI::IsMember({"reject", "raw"}));
  dist_cmd->add_option("--output", dist_output, "write to file instead of stdout");

  // equiv
  auto* equiv_cmd =
      app.add_subcommand("equiv", "simultaneous conjugacy of two origamis");
  OrigamiArgs equiv_first;
  OrigamiArgs equiv_second;
  equiv_first.attach(equiv_cmd);
  equiv_second.attach(equiv_cmd, "2");
  std::string equiv_output;
  equiv_cmd->add_option("--output", equiv_output, "write to file instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant check suite");
  std::string verify_level = "quick";
  bool verify_fault = false;
  std::string verify_format = "text";
  std::string verify_output;
  verify_cmd->add_option("--level", verify_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_flag("--inject-fault", verify_fault,
                       "corrupt one character cell to prove the harness catches it");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output", verify_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (genus_cmd->parsed()) {
      return run_genus(genus_args, genus_orbits, genus_format, genus_output);
    }
    if (orbits_cmd->parsed()) {
      return run_orbits(orbits_args, orbits_format, orbits_output);
    }
    if (chartable_cmd->parsed()) {
      return run_chartable(chartable_n, chartable_format, chartable_output);
    }
    if (wreath_cmd->parsed()) {
      return run_wreath_chartable(wreath_n, wreath_diagonal, wreath_format,
                                  wreath_output);
    }
    if (frob_cmd->parsed()) {
      return run_frobenius(frob_group, frob_n, frob_c1, frob_c2, frob_z,
                           frob_output);
    }
    if (prob_cmd->parsed()) {
      return run_prob(prob_n, prob_type, prob_full, prob_output);
    }
    if (dist_cmd->parsed()) {
      return run_dist(dist_n, dist_exact, dist_samples, dist_seed, dist_workers,
                      dist_mode, dist_output);
    }
    if (equiv_cmd->parsed()) {
      return run_equiv(equiv_first, equiv_second, equiv_output);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_level, verify_fault, verify_format, verify_output);
    }
  } catch (const disconnected_error& e) {
    std::cerr << e.what() << '\n';
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return exit_verify;
  }
  return exit_usage;
}
