#pragma once

#include "origami/numeric.hpp"
#include "origami/partition.hpp"
#include "origami/wreath.hpp"
#include "origami/young.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace origami {

// Character table of the cyclic top group {id, c, c^2, c^3}, c = (1 2 3 4):
//          id   c    c^2  c^3
//   chi^1   1   1     1    1
//   chi^2   1   i    -1   -i
//   chi^3   1  -1     1   -1
//   chi^4   1  -i    -1    i
GaussianRational c4_character(int which, int power);
GaussianRational c4_character(int which, const Permutation& elem);

// 0..3 such that elem = c^power; rejects permutations outside the group.
int c4_power(const Permutation& elem);

// Stabilizer of a base tuple under cyclic rotation of the positions.
enum class Inertia { C4, C2, Trivial };
int inertia_order(Inertia inertia);   // 4, 2, 1
int inertia_index(Inertia inertia);   // 1, 2, 4
std::string inertia_name(Inertia inertia);

using BaseTuple = std::array<Partition, 4>;

Inertia inertia_of(const BaseTuple& base);
// Lexicographically smallest cyclic rotation; tuples in one rotation orbit
// name the same induced representation.
BaseTuple canonical_rotation(BaseTuple base);

// Irreducible of C4 wr S_n: a rotation orbit of base tuples together with an
// irreducible character of the inertia subgroup. top_char is 1..4 over C4
// (chi^top_char), 1..2 over {id, c^2} (trivial / sign at c^2), 1 when trivial.
struct WreathIrrep {
  BaseTuple base;
  Inertia inertia = Inertia::C4;
  int top_char = 1;
  Integer dim;

  std::string label() const;
};

// Character of the extension of the outer tensor product along base to
// elements whose top keeps base constant on every top cycle: the product
// over top cycles of chi^{base[leader]} at the cycle product class. Works
// for any top degree; throws if base varies along a cycle of e.top.
Integer extended_character(std::span<const Partition> base, const WreathElement& e);

// Character of the induced irreducible at e. The average over the group in
// the induction formula collapses: conjugating by a bottom tuple maps every
// cycle product to a conjugate, so only the four top rotations contribute.
GaussianRational irrep_character(const WreathIrrep& D, const WreathElement& e);

enum class TableMode { Full, DiagonalOnly };

// Conjugacy classes and irreducible characters of C4 wr S_n. Full mode
// (n <= 3) enumerates the group, buckets the classes and tabulates every
// character value; diagonal-only mode (n <= 15) lists just the irreps with
// all four base factors equal, the only ones the probability formulas need.
class C4WreathSystem {
 public:
  int n() const { return n_; }
  TableMode mode() const { return mode_; }
  const TopGroup& top() const { return top_; }
  const Integer& order() const { return order_; }
  const std::vector<WreathIrrep>& irreps() const { return irreps_; }

  bool has_classes() const { return mode_ == TableMode::Full; }
  std::size_t class_count() const;
  const std::vector<WreathElement>& class_reps() const;
  const std::vector<Integer>& class_sizes() const;
  std::size_t class_index(const WreathElement& e) const;
  std::size_t identity_class() const;
  std::size_t inverse_class(std::size_t cls) const;
  const GaussianRational& value(std::size_t irrep, std::size_t cls) const;

  std::string to_csv() const;
  std::string to_json() const;

 private:
  friend C4WreathSystem irreducible_system(int n, TableMode mode);
  C4WreathSystem() : top_(TopGroup::cyclic4()) {}

  void require_classes() const;

  int n_ = 0;
  TableMode mode_ = TableMode::Full;
  TopGroup top_;
  Integer order_;
  std::vector<WreathIrrep> irreps_;
  std::vector<WreathElement> reps_;
  std::vector<Integer> sizes_;
  std::map<std::vector<int>, std::size_t> canon_to_class_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<GaussianRational>> values_;
};

C4WreathSystem irreducible_system(int n, TableMode mode = TableMode::Full);

// Number of solutions of g1 g2 = z with g1, g2 in the given classes, from
// the class-sum identity; exact, and validated to land on a non-negative
// integer.
Integer frobenius_count(const C4WreathSystem& sys, std::size_t c1, std::size_t c2,
                        const WreathElement& z);
Integer frobenius_count(const CharacterTable& table, const Partition& c1,
                        const Partition& c2, const Permutation& z);

// P(sigma tau = pi) for sigma uniform on the class of ((1 3)(2 4); id,...)
// and tau uniform on the class of ((1 2 3 4); id,...). Zero unless pi.top is
// (1 4 3 2). Full mode only.
Rational sigma_tau_probability(const WreathElement& pi, const C4WreathSystem& sys);

// The collapsed form of the same probability: (1/n!^4) sum over lambda of
// chi^lambda(pi') / f^lambda, with pi' the cycle product of pi.
Rational reduced_probability(int n, const Partition& pi_prime_type);
Rational reduced_probability(const Permutation& pi_prime);

// Split of reduced_probability into the exactly extracted four-term leading
// part (1/n!^4)(1 + sgn(pi'))(1 + (l-1)/(n-1)), l = fixed points of pi', and
// the remainder over all other lambda. Requires n >= 4 so the four extracted
// partitions [n], [1^n], [n-1,1], [2,1^(n-2)] are distinct.
struct RefinedProbability {
  Rational leading;
  Rational remainder;
  Rational total() const { return leading + remainder; }
};
RefinedProbability refined_probability(int n, const Partition& pi_prime_type);
RefinedProbability refined_probability(const Permutation& pi_prime);

}  // namespace origami
