#pragma once

#include "origami/partition.hpp"

#include <random>
#include <span>
#include <string>
#include <vector>

namespace origami {

// Permutation of {1,...,n}. Images are stored 0-based; the public apply()
// speaks 1-based like all printed cycle notation.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  // images[i] is the image of i+1, 1-based values.
  static Permutation from_images(const std::vector<int>& one_based);
  // Trusted 0-based images, no validation. Hot paths only.
  static Permutation unchecked(std::vector<int> zero_based);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x - 1] + 1; }
  int image0(int i) const { return img_[i]; }
  const std::vector<int>& images0() const { return img_; }
  std::vector<int> images() const;  // 1-based copy
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// compose(p, q) applies q first: compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// p q p^-1 q^-1 under the composition convention above.
Permutation commutator(const Permutation& p, const Permutation& q);

// Cycle decomposition with each cycle led by its smallest symbol and cycles
// sorted by leader; fixed points included. 1-based symbols.
std::vector<std::vector<int>> cycles(const Permutation& p);
int cycle_count(const Permutation& p);
Partition cycle_type(const Permutation& p);
int sign(const Permutation& p);  // (-1)^(n - #cycles)

// Canonical representative of a cycle type: consecutive cycles, largest part
// first, so that cycle_type(permutation_of_type(rho)) == rho.
Permutation permutation_of_type(const Partition& rho);

// "(1 2 3)(4 5)"; fixed points are omitted and the identity prints as "id".
std::string format_cycles(const Permutation& p);
// Accepts the printed form, "()" and "id". Symbols must lie in 1..degree.
Permutation parse_cycles(const std::string& text, int degree);

// Orbit of 1 under the generated group covers all of {1,...,n}. An empty
// generator list is transitive only for n = 1.
bool is_transitive(std::span<const Permutation> generators, int n);

Permutation random_permutation(int n, std::mt19937_64& eng);

}  // namespace origami
