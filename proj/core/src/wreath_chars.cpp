#include "origami/wreath_chars.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace origami {

namespace {

// i^k as a Gaussian rational
GaussianRational unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

Integer factorial_pow4(int n) {
  Integer f = factorial(n);
  Integer sq = f * f;
  return sq * sq;
}

}  // namespace

GaussianRational c4_character(int which, int power) {
  if (which < 1 || which > 4) throw std::invalid_argument("character index must be 1..4");
  if (power < 0 || power > 3) throw std::invalid_argument("element power must be 0..3");
  return unit_power((which - 1) * power);
}

GaussianRational c4_character(int which, const Permutation& elem) {
  return c4_character(which, c4_power(elem));
}

int c4_power(const Permutation& elem) {
  if (elem.degree() != 4) throw std::invalid_argument("cyclic top elements have degree 4");
  Permutation c = Permutation::from_images({2, 3, 4, 1});
  Permutation cur = Permutation::identity(4);
  for (int p = 0; p < 4; ++p) {
    if (elem == cur) return p;
    cur = compose(c, cur);
  }
  throw std::invalid_argument("permutation " + format_cycles(elem) + " is not a power of (1 2 3 4)");
}

int inertia_order(Inertia inertia) {
  switch (inertia) {
    case Inertia::C4: return 4;
    case Inertia::C2: return 2;
    default: return 1;
  }
}

int inertia_index(Inertia inertia) { return 4 / inertia_order(inertia); }

std::string inertia_name(Inertia inertia) {
  switch (inertia) {
    case Inertia::C4: return "C4";
    case Inertia::C2: return "C2";
    default: return "trivial";
  }
}

Inertia inertia_of(const BaseTuple& base) {
  if (base[0] == base[1] && base[1] == base[2] && base[2] == base[3]) return Inertia::C4;
  if (base[0] == base[2] && base[1] == base[3]) return Inertia::C2;
  return Inertia::Trivial;
}

BaseTuple canonical_rotation(BaseTuple base) {
  BaseTuple best = base;
  for (int s = 1; s < 4; ++s) {
    BaseTuple rot;
    for (int i = 0; i < 4; ++i) rot[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>((i + s) % 4)];
    if (rot < best) best = rot;
  }
  return best;
}

std::string WreathIrrep::label() const {
  std::string s = "D(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += "|";
    s += partition_to_string(base[i]);
  }
  s += "):x" + std::to_string(top_char);
  return s;
}

Integer extended_character(std::span<const Partition> base, const WreathElement& e) {
  if (static_cast<int>(base.size()) != e.top_degree())
    throw std::invalid_argument("base tuple length must match the top degree");
  Integer prod = 1;
  for (const auto& cp : cycle_products(e)) {
    const Partition& lam = base[static_cast<std::size_t>(cp.leader - 1)];
    // the extension is defined only where the base is cycle-constant
    int pos = cp.leader;
    Permutation h_inv = inverse(e.top);
    for (int step = 0; step < cp.length; ++step) {
      if (base[static_cast<std::size_t>(pos - 1)] != lam)
        throw std::invalid_argument("base tuple varies along a top cycle");
      pos = h_inv.apply(pos);
    }
    if (prod == 0) continue;
    prod *= mn_character(lam, cycle_type(cp.product));
  }
  return prod;
}

namespace {

// (c^p; id) e (c^p; id)^{-1}: same top, bottom factors rotated
WreathElement conjugate_by_rotation(const WreathElement& e, int p) {
  Permutation c = Permutation::from_images({2, 3, 4, 1});
  Permutation t = Permutation::identity(4);
  for (int s = 0; s < p; ++s) t = compose(c, t);
  Permutation t_inv = inverse(t);
  WreathElement out;
  out.top = e.top;
  out.bottom.reserve(4);
  for (int i = 1; i <= 4; ++i)
    out.bottom.push_back(e.bottom[static_cast<std::size_t>(t_inv.apply(i) - 1)]);
  return out;
}

GaussianRational inertia_top_value(const WreathIrrep& D, int power) {
  switch (D.inertia) {
    case Inertia::C4:
      return c4_character(D.top_char, power);
    case Inertia::C2:
      return GaussianRational(Rational((D.top_char == 2 && power == 2) ? -1 : 1), Rational(0));
    default:
      return GaussianRational(Rational(1), Rational(0));
  }
}

bool in_inertia(Inertia inertia, int power) {
  switch (inertia) {
    case Inertia::C4: return true;
    case Inertia::C2: return power == 0 || power == 2;
    default: return power == 0;
  }
}

}  // namespace

GaussianRational irrep_character(const WreathIrrep& D, const WreathElement& e) {
  if (e.top_degree() != 4) throw std::invalid_argument("wreath element top degree must be 4");
  int power = c4_power(e.top);
  if (!in_inertia(D.inertia, power)) return {};

  // Induction average: conjugating by (id; g) conjugates every cycle product
  // by g at the leader, so the character terms do not depend on g and the
  // bottom sum cancels against the group order. Only the top rotations stay.
  Integer acc = 0;
  for (int p = 0; p < 4; ++p)
    acc += extended_character(std::span<const Partition>(D.base.data(), 4),
                              conjugate_by_rotation(e, p));
  GaussianRational out = inertia_top_value(D, power) * Rational(acc, inertia_order(D.inertia));
  if (!is_integral(out.re) || !is_integral(out.im))
    throw std::logic_error("character value " + out.str() + " is not a Gaussian integer");
  return out;
}

std::size_t C4WreathSystem::class_count() const {
  require_classes();
  return reps_.size();
}

const std::vector<WreathElement>& C4WreathSystem::class_reps() const {
  require_classes();
  return reps_;
}

const std::vector<Integer>& C4WreathSystem::class_sizes() const {
  require_classes();
  return sizes_;
}

std::size_t C4WreathSystem::class_index(const WreathElement& e) const {
  require_classes();
  auto it = canon_to_class_.find(w_cycle_type(e, top_).canon);
  if (it == canon_to_class_.end())
    throw std::invalid_argument("element does not belong to this group");
  return it->second;
}

std::size_t C4WreathSystem::identity_class() const {
  require_classes();
  return 0;
}

std::size_t C4WreathSystem::inverse_class(std::size_t cls) const {
  require_classes();
  return inverse_class_.at(cls);
}

const GaussianRational& C4WreathSystem::value(std::size_t irrep, std::size_t cls) const {
  require_classes();
  return values_.at(irrep).at(cls);
}

void C4WreathSystem::require_classes() const {
  if (mode_ != TableMode::Full)
    throw std::logic_error("class data is only available in full table mode");
}

std::string C4WreathSystem::to_csv() const {
  std::ostringstream os;
  if (mode_ != TableMode::Full) {
    os << "irrep,dim\n";
    for (const auto& d : irreps_) os << d.label() << "," << d.dim.str() << "\n";
    return os.str();
  }
  os << "irrep";
  for (const auto& rep : reps_) os << "," << w_cycle_type(rep, top_).to_string();
  os << "\n";
  for (std::size_t d = 0; d < irreps_.size(); ++d) {
    os << irreps_[d].label();
    for (std::size_t c = 0; c < reps_.size(); ++c) os << "," << values_[d][c].str();
    os << "\n";
  }
  return os.str();
}

std::string C4WreathSystem::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["order"] = order_.str();
  j["mode"] = mode_ == TableMode::Full ? "full" : "diagonal";
  j["irreps"] = nlohmann::json::array();
  for (const auto& d : irreps_) {
    nlohmann::json item;
    item["base"] = {partition_to_string(d.base[0]), partition_to_string(d.base[1]),
                    partition_to_string(d.base[2]), partition_to_string(d.base[3])};
    item["inertia"] = inertia_name(d.inertia);
    item["top_char"] = d.top_char;
    item["dim"] = d.dim.str();
    j["irreps"].push_back(std::move(item));
  }
  if (mode_ == TableMode::Full) {
    j["classes"] = nlohmann::json::array();
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      nlohmann::json item;
      item["rep"] = format_wreath(reps_[c]);
      item["type"] = w_cycle_type(reps_[c], top_).to_string();
      item["size"] = sizes_[c].str();
      j["classes"].push_back(std::move(item));
    }
    j["values"] = nlohmann::json::array();
    for (const auto& row : values_) {
      nlohmann::json jrow = nlohmann::json::array();
      for (const auto& v : row) jrow.push_back(v.str());
      j["values"].push_back(std::move(jrow));
    }
  }
  return j.dump(2);
}

C4WreathSystem irreducible_system(int n, TableMode mode) {
  if (n < 1) throw std::invalid_argument("bottom degree must be positive");
  if (mode == TableMode::Full && n > 3)
    throw std::invalid_argument("full table mode enumerates the group; limited to n <= 3");
  if (n > 15) throw std::invalid_argument("diagonal mode limited to n <= 15");

  C4WreathSystem sys;
  sys.n_ = n;
  sys.mode_ = mode;
  sys.order_ = 4 * factorial_pow4(n);

  auto parts = partitions(n);
  auto add_irreps = [&sys](const BaseTuple& base) {
    Inertia inertia = inertia_of(base);
    Integer prod = 1;
    for (const auto& lam : base) prod *= f_lambda(lam);
    Integer dim = inertia_index(inertia) * prod;
    for (int tc = 1; tc <= inertia_order(inertia); ++tc)
      sys.irreps_.push_back({base, inertia, tc, dim});
  };

  if (mode == TableMode::DiagonalOnly) {
    for (const auto& lam : parts) add_irreps({lam, lam, lam, lam});
  } else {
    std::size_t m = parts.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t d = 0; d < m; ++d) {
            BaseTuple base{parts[a], parts[b], parts[c], parts[d]};
            if (base == canonical_rotation(base)) add_irreps(base);
          }
  }

  if (mode == TableMode::Full) {
    for_each_wreath(sys.top_, n, [&sys](const WreathElement& e) {
      auto canon = w_cycle_type(e, sys.top_).canon;
      auto [it, inserted] = sys.canon_to_class_.try_emplace(std::move(canon), sys.reps_.size());
      if (inserted) {
        sys.reps_.push_back(e);
        sys.sizes_.push_back(1);
      } else {
        ++sys.sizes_[it->second];
      }
    });

    Integer covered = 0;
    for (const auto& s : sys.sizes_) covered += s;
    if (covered != sys.order_ || sys.reps_.size() != sys.irreps_.size())
      throw std::logic_error("class bucketing does not match the irreducible count");

    Integer dim_sq = 0;
    for (const auto& d : sys.irreps_) dim_sq += d.dim * d.dim;
    if (dim_sq != sys.order_)
      throw std::logic_error("dimension squares do not sum to the group order");

    for (std::size_t c = 0; c < sys.reps_.size(); ++c)
      sys.inverse_class_.push_back(sys.class_index(w_inverse(sys.reps_[c])));

    sys.values_.resize(sys.irreps_.size());
    for (std::size_t d = 0; d < sys.irreps_.size(); ++d) {
      sys.values_[d].reserve(sys.reps_.size());
      for (const auto& rep : sys.reps_)
        sys.values_[d].push_back(irrep_character(sys.irreps_[d], rep));
      if (sys.values_[d][0] != GaussianRational(Rational(sys.irreps_[d].dim), Rational(0)))
        throw std::logic_error("character at the identity differs from the dimension");
    }
  }

  return sys;
}

Integer frobenius_count(const C4WreathSystem& sys, std::size_t c1, std::size_t c2,
                        const WreathElement& z) {
  std::size_t zc = sys.inverse_class(sys.class_index(z));
  GaussianRational acc;
  for (std::size_t d = 0; d < sys.irreps().size(); ++d) {
    GaussianRational term = sys.value(d, c1) * sys.value(d, c2) * sys.value(d, zc);
    acc += term / Rational(sys.irreps()[d].dim);
  }
  Rational scale(sys.class_sizes().at(c1) * sys.class_sizes().at(c2), sys.order());
  acc = acc * scale;
  if (!acc.is_real() || !is_integral(acc.re) || acc.re < 0)
    throw std::logic_error("solution count " + acc.str() + " is not a non-negative integer");
  return to_integer(acc.re);
}

Integer frobenius_count(const CharacterTable& table, const Partition& c1,
                        const Partition& c2, const Permutation& z) {
  if (z.degree() != table.n) throw std::invalid_argument("element degree does not match the table");
  Partition zt = cycle_type(z);
  Rational acc(0);
  for (const auto& lam : table.labels)
    acc += Rational(table.value(lam, c1) * table.value(lam, c2) * table.value(lam, zt),
                    f_lambda(lam));
  acc *= Rational(sn_class_size(table.n, c1) * sn_class_size(table.n, c2), factorial(table.n));
  if (!is_integral(acc) || acc < 0)
    throw std::logic_error("solution count " + to_string(acc) + " is not a non-negative integer");
  return to_integer(acc);
}

Rational sigma_tau_probability(const WreathElement& pi, const C4WreathSystem& sys) {
  int n = sys.n();
  WreathElement sigma0 = w_identity(4, n);
  sigma0.top = parse_cycles("(1 3)(2 4)", 4);
  WreathElement tau0 = w_identity(4, n);
  tau0.top = parse_cycles("(1 2 3 4)", 4);

  std::size_t cs = sys.class_index(sigma0);
  std::size_t ct = sys.class_index(tau0);
  std::size_t cz = sys.inverse_class(sys.class_index(pi));

  GaussianRational acc;
  for (std::size_t d = 0; d < sys.irreps().size(); ++d) {
    GaussianRational term = sys.value(d, cs) * sys.value(d, ct) * sys.value(d, cz);
    acc += term / Rational(sys.irreps()[d].dim);
  }
  acc = acc / Rational(sys.order());
  if (!acc.is_real())
    throw std::logic_error("probability " + acc.str() + " has an imaginary part");
  if (acc.re < 0 || acc.re > 1)
    throw std::logic_error("probability " + acc.str() + " outside [0,1]");
  return acc.re;
}

Rational reduced_probability(int n, const Partition& pi_prime_type) {
  if (pi_prime_type.weight() != n)
    throw std::invalid_argument("cycle type must be a partition of n");
  Rational acc(0);
  for (const auto& lam : partitions(n))
    acc += Rational(mn_character(lam, pi_prime_type), f_lambda(lam));
  return acc / Rational(factorial_pow4(n));
}

Rational reduced_probability(const Permutation& pi_prime) {
  return reduced_probability(pi_prime.degree(), cycle_type(pi_prime));
}

RefinedProbability refined_probability(int n, const Partition& pi_prime_type) {
  if (n < 4)
    throw std::invalid_argument("the four extracted partitions are distinct only for n >= 4");
  if (pi_prime_type.weight() != n)
    throw std::invalid_argument("cycle type must be a partition of n");

  int fixed = 0;
  for (int part : pi_prime_type.parts)
    if (part == 1) ++fixed;
  int sgn = ((n - pi_prime_type.rows()) % 2 == 0) ? 1 : -1;

  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  std::vector<int> tail{2};
  tail.insert(tail.end(), static_cast<std::size_t>(n - 2), 1);
  const BaseTuple extracted{Partition({n}), Partition(ones), Partition({n - 1, 1}),
                            Partition(tail)};

  RefinedProbability out;
  Rational scale(1, factorial_pow4(n));
  out.leading = Rational(1 + sgn) * (Rational(1) + Rational(fixed - 1, n - 1)) * scale;
  out.remainder = Rational(0);
  for (const auto& lam : partitions(n)) {
    if (std::find(extracted.begin(), extracted.end(), lam) != extracted.end()) continue;
    out.remainder += Rational(mn_character(lam, pi_prime_type), f_lambda(lam));
  }
  out.remainder *= scale;
  return out;
}

RefinedProbability refined_probability(const Permutation& pi_prime) {
  return refined_probability(pi_prime.degree(), cycle_type(pi_prime));
}

}  // namespace origami
