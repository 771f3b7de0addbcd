#pragma once

#include "origami/numeric.hpp"
#include "origami/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace origami {

// tableau[i][j] is the entry in row i, column j of the Young diagram.
using Tableau = std::vector<std::vector<int>>;

std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

// Dimension of the irreducible [lambda]: n! prod_{i<k}(h_i1 - h_k1) / prod h_i1!
// over the first-column hook lengths. Exact.
Integer f_lambda(const Partition& lambda);

// All standard tableaux of shape lambda in the basis order used by the
// transposition matrices: at the first row-major difference the tableau with
// the larger entry comes first, so for (2,2) the order is
// [[1,3],[2,4]], [[1,2],[3,4]].
std::vector<Tableau> standard_tableaux(const Partition& lambda,
                                       long long max_count = 10000);

struct BorderStrip {
  Partition result;  // shape left after removing the strip
  int leg = 0;       // rows spanned minus one
};

// Removable border strips of size k, one per hook of length k.
std::vector<BorderStrip> border_strips(const Partition& lambda, int k);

// chi^lambda at cycle type rho by the Murnaghan-Nakayama recursion, peeling
// the largest cycle first. Exact; memoized across calls.
Integer mn_character(const Partition& lambda, const Partition& rho);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;             // row and column labels, largest-first lex
  std::vector<Integer> class_sizes;          // per column
  std::vector<std::vector<Integer>> values;  // values[irrep][class]

  std::size_t index_of(const Partition& p) const;
  const Integer& value(const Partition& lambda, const Partition& rho) const;
  std::size_t identity_class() const;  // column of (1^n)
  std::string to_csv() const;
  std::string to_json() const;
};

CharacterTable character_table(int n, int max_n = 15);

// Matrix of the adjacent transposition (r, r+1) on the standard tableau basis
// of [lambda]. The seminormal form is exact; the orthogonal form is its
// symmetrized floating point variant.
std::vector<std::vector<Rational>> young_seminormal_matrix(const Partition& lambda, int r);
std::vector<std::vector<double>> young_orthogonal_matrix(const Partition& lambda, int r);

// sum over lambda |- n of f_lambda^(-c), optionally restricted to partitions
// with lambda_1 > n - a.
double dimension_power_sum(int n, double c, std::optional<int> a = std::nullopt);

struct BoundCheck {
  std::string name;
  double max_ratio = 0.0;  // max |chi| / bound over the applicable cells
  Partition witness_lambda;
  Partition witness_class;
  int cells = 0;
  int violations = 0;
};

// Sweeps the full table of S_n against the character bounds: the generic
// (2n)^(m/2) bound with m the number of cycles, and for classes of type (r^m)
// the bound m! r^m (n!)^(-1/r) f_lambda^(1/r).
std::vector<BoundCheck> check_character_bounds(int n);

}  // namespace origami
