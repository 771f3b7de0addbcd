#include "origami/young.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace origami {

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  std::vector<std::vector<int>> h(lambda.rows());
  for (int i = 0; i < lambda.rows(); ++i) {
    h[i].resize(lambda.parts[i]);
    for (int j = 0; j < lambda.parts[i]; ++j)
      h[i][j] = (lambda.parts[i] - (i + 1)) + (conj.parts[j] - (j + 1)) + 1;
  }
  return h;
}

Integer f_lambda(const Partition& lambda) {
  if (lambda.empty()) return 1;
  const int rows = lambda.rows();
  std::vector<Integer> h(rows);
  for (int i = 0; i < rows; ++i) h[i] = lambda.parts[i] + rows - (i + 1);
  Integer num = factorial(lambda.weight());
  for (int i = 0; i < rows; ++i)
    for (int k = i + 1; k < rows; ++k) num *= h[i] - h[k];
  Integer den = 1;
  for (int i = 0; i < rows; ++i) den *= factorial(static_cast<int>(h[i].convert_to<long long>()));
  return num / den;
}

namespace {

// Flattened row-major entries; the basis order compares these, larger first.
std::vector<int> flatten(const Tableau& t) {
  std::vector<int> out;
  for (const auto& row : t)
    for (int v : row) out.push_back(v);
  return out;
}

void grow_tableaux(const Partition& lambda, int next, std::vector<int>& fill,
                   Tableau& cur, std::vector<Tableau>& out) {
  const int n = lambda.weight();
  if (next > n) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < lambda.rows(); ++i) {
    int j = fill[i];
    if (j >= lambda.parts[i]) continue;
    if (i > 0 && fill[i - 1] <= j) continue;  // cell above must be filled
    cur[i][j] = next;
    ++fill[i];
    grow_tableaux(lambda, next + 1, fill, cur, out);
    --fill[i];
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda, long long max_count) {
  Integer f = f_lambda(lambda);
  if (f > max_count)
    throw std::invalid_argument("standard_tableaux: f_lambda = " + f.str() +
                                " exceeds bound " + std::to_string(max_count));
  Tableau cur(lambda.rows());
  for (int i = 0; i < lambda.rows(); ++i) cur[i].assign(lambda.parts[i], 0);
  std::vector<int> fill(lambda.rows(), 0);
  std::vector<Tableau> out;
  grow_tableaux(lambda, 1, fill, cur, out);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return flatten(a) > flatten(b); });
  return out;
}

std::vector<BorderStrip> border_strips(const Partition& lambda, int k) {
  if (k <= 0) throw std::invalid_argument("border_strips: k must be positive");
  std::vector<BorderStrip> out;
  Partition conj = conjugate(lambda);
  auto hooks = hook_lengths(lambda);
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.parts[i]; ++j) {
      if (hooks[i][j] != k) continue;
      int last = conj.parts[j] - 1;  // last row of column j
      std::vector<int> parts(lambda.parts);
      for (int r = i; r < last; ++r) parts[r] = lambda.parts[r + 1] - 1;
      parts[last] = j;
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.push_back({Partition(std::move(parts)), last - i});
    }
  }
  return out;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MnKey, Integer> mn_cache;
std::mutex mn_mutex;

Integer mn_rec(const Partition& lambda, const std::vector<int>& rho) {
  if (rho.empty()) return 1;  // empty shape, empty type
  MnKey key{lambda.parts, rho};
  if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;
  std::vector<int> rest(rho.begin() + 1, rho.end());
  Integer total = 0;
  for (const auto& strip : border_strips(lambda, rho[0])) {
    Integer term = mn_rec(strip.result, rest);
    total += strip.leg % 2 == 0 ? term : -term;
  }
  mn_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("mn_character: |lambda| != |rho|");
  std::lock_guard<std::mutex> lock(mn_mutex);
  return mn_rec(lambda, rho.parts);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == p) return i;
  throw std::invalid_argument("partition " + partition_to_string(p) + " not in table");
}

const Integer& CharacterTable::value(const Partition& lambda, const Partition& rho) const {
  return values[index_of(lambda)][index_of(rho)];
}

std::size_t CharacterTable::identity_class() const { return labels.size() - 1; }

std::string CharacterTable::to_csv() const {
  std::string s = "irrep";
  for (const auto& c : labels) s += "," + partition_to_string(c);
  s += '\n';
  for (std::size_t r = 0; r < labels.size(); ++r) {
    s += partition_to_string(labels[r]);
    for (const auto& v : values[r]) s += "," + v.str();
    s += '\n';
  }
  return s;
}

std::string CharacterTable::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto strs = nlohmann::json::array();
  for (const auto& p : labels) strs.push_back(partition_to_string(p));
  j["labels"] = strs;
  j["classes"] = strs;
  auto sizes = nlohmann::json::array();
  for (const auto& z : class_sizes) sizes.push_back(z.str());
  j["class_sizes"] = sizes;
  auto rows = nlohmann::json::array();
  for (const auto& row : values) {
    auto out = nlohmann::json::array();
    for (const auto& v : row) out.push_back(v.str());
    rows.push_back(std::move(out));
  }
  j["values"] = rows;
  return j.dump(2);
}

CharacterTable character_table(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("character_table: n must be positive");
  if (n > max_n)
    throw std::invalid_argument("character_table: n exceeds bound " + std::to_string(max_n));
  CharacterTable t;
  t.n = n;
  t.labels = partitions(n);
  for (const auto& rho : t.labels) t.class_sizes.push_back(sn_class_size(n, rho));
  t.values.resize(t.labels.size());
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    t.values[r].reserve(t.labels.size());
    for (const auto& rho : t.labels) t.values[r].push_back(mn_character(t.labels[r], rho));
  }
  return t;
}

namespace {

struct CellRef {
  int row = -1, col = -1;
};

// positions[v] = cell of entry v (1-based entries)
std::vector<CellRef> positions_of(const Tableau& t, int n) {
  std::vector<CellRef> pos(n + 1);
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    for (int j = 0; j < static_cast<int>(t[i].size()); ++j) pos[t[i][j]] = {i, j};
  return pos;
}

// Shared skeleton for both matrix forms. For the pair (t_i, t_j), i < j, with
// t_j = t_i with r and r+1 swapped, p = -1/d where d is the axial distance
// from r to r+1 in t_i; the block is [[-p, x],[y, p]] with x y = 1 - p^2.
struct TranspositionAction {
  int dim = 0;
  std::vector<int> diag_same_row;  // indices with entry +1
  std::vector<int> diag_same_col;  // indices with entry -1
  struct Block {
    int i, j;
    Rational p;
  };
  std::vector<Block> blocks;
};

TranspositionAction transposition_action(const Partition& lambda, int r) {
  const int n = lambda.weight();
  if (r < 1 || r + 1 > n)
    throw std::invalid_argument("transposition (r, r+1) out of range for n = " + std::to_string(n));
  auto tabs = standard_tableaux(lambda);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(tabs.size()); ++i) index[flatten(tabs[i])] = i;

  TranspositionAction act;
  act.dim = static_cast<int>(tabs.size());
  for (int i = 0; i < act.dim; ++i) {
    auto pos = positions_of(tabs[i], n);
    CellRef a = pos[r], b = pos[r + 1];
    if (a.row == b.row) {
      act.diag_same_row.push_back(i);
    } else if (a.col == b.col) {
      act.diag_same_col.push_back(i);
    } else {
      Tableau swapped = tabs[i];
      swapped[a.row][a.col] = r + 1;
      swapped[b.row][b.col] = r;
      int j = index.at(flatten(swapped));
      if (i < j) {
        int d = (b.col - b.row) - (a.col - a.row);
        act.blocks.push_back({i, j, Rational(-1, d)});
      }
    }
  }
  return act;
}

}  // namespace

std::vector<std::vector<Rational>> young_seminormal_matrix(const Partition& lambda, int r) {
  auto act = transposition_action(lambda, r);
  std::vector<std::vector<Rational>> m(act.dim, std::vector<Rational>(act.dim, Rational(0)));
  for (int i : act.diag_same_row) m[i][i] = 1;
  for (int i : act.diag_same_col) m[i][i] = -1;
  for (const auto& b : act.blocks) {
    m[b.i][b.i] = -b.p;
    m[b.j][b.j] = b.p;
    m[b.i][b.j] = 1 - b.p * b.p;
    m[b.j][b.i] = 1;
  }
  return m;
}

std::vector<std::vector<double>> young_orthogonal_matrix(const Partition& lambda, int r) {
  auto act = transposition_action(lambda, r);
  std::vector<std::vector<double>> m(act.dim, std::vector<double>(act.dim, 0.0));
  for (int i : act.diag_same_row) m[i][i] = 1.0;
  for (int i : act.diag_same_col) m[i][i] = -1.0;
  for (const auto& b : act.blocks) {
    double p = to_double(b.p);
    double off = std::sqrt(1.0 - p * p);
    m[b.i][b.i] = -p;
    m[b.j][b.j] = p;
    m[b.i][b.j] = off;
    m[b.j][b.i] = off;
  }
  return m;
}

double dimension_power_sum(int n, double c, std::optional<int> a) {
  double sum = 0.0;
  for (const auto& lambda : partitions(n)) {
    if (a && lambda.part(0) <= n - *a) continue;
    sum += std::pow(to_double(f_lambda(lambda)), -c);
  }
  return sum;
}

std::vector<BoundCheck> check_character_bounds(int n) {
  CharacterTable t = character_table(n);
  BoundCheck general{"(2n)^(m/2)", 0.0, {}, {}, 0, 0};
  BoundCheck regular{"m! r^m (n!)^(-1/r) f^(1/r)", 0.0, {}, {}, 0, 0};
  const double nfact = to_double(factorial(n));
  for (std::size_t ci = 0; ci < t.labels.size(); ++ci) {
    const Partition& rho = t.labels[ci];
    const int m = rho.rows();
    const double general_bound = std::pow(2.0 * n, m / 2.0);
    const bool is_regular =
        std::all_of(rho.parts.begin(), rho.parts.end(), [&](int p) { return p == rho.parts[0]; });
    const int r = rho.parts[0];
    double regular_bound = 0.0;
    if (is_regular)
      regular_bound = to_double(factorial(m)) * std::pow(double(r), m) * std::pow(nfact, -1.0 / r);
    for (std::size_t li = 0; li < t.labels.size(); ++li) {
      const double chi = std::abs(to_double(t.values[li][ci]));
      ++general.cells;
      double ratio = chi / general_bound;
      if (ratio > general.max_ratio) {
        general.max_ratio = ratio;
        general.witness_lambda = t.labels[li];
        general.witness_class = rho;
      }
      if (ratio > 1.0 + 1e-9) ++general.violations;
      if (is_regular) {
        const double bound =
            regular_bound * std::pow(to_double(t.values[li][t.identity_class()]), 1.0 / r);
        ++regular.cells;
        ratio = chi / bound;
        if (ratio > regular.max_ratio) {
          regular.max_ratio = ratio;
          regular.witness_lambda = t.labels[li];
          regular.witness_class = rho;
        }
        if (ratio > 1.0 + 1e-9) ++regular.violations;
      }
    }
  }
  return {general, regular};
}

}  // namespace origami
