#pragma once

#include "origami/perm.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace origami {

// Explicit finite group of permutations acting on the copy positions of a
// wreath product. Closure and inverses are validated at construction.
class TopGroup {
 public:
  static TopGroup from_elements(std::vector<Permutation> elements);
  // {e, c, c^2, c^3} for c = (1 2 3 4), listed in power order.
  static TopGroup cyclic4();
  // All of S_k; k <= 8.
  static TopGroup symmetric(int k);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& identity() const;
  bool contains(const Permutation& p) const;

 private:
  std::vector<Permutation> elements_;  // sorted
  int degree_ = 0;
};

// Element (top; f) with one bottom permutation per copy position, all of the
// same degree. bottom[i-1] is the factor attached to position i.
struct WreathElement {
  Permutation top;
  std::vector<Permutation> bottom;

  int top_degree() const { return top.degree(); }
  int bottom_degree() const {
    return bottom.empty() ? 0 : bottom.front().degree();
  }

  bool operator==(const WreathElement&) const = default;
  auto operator<=>(const WreathElement&) const = default;
};

WreathElement w_identity(int k, int n);

// (h; f)(h'; f') = (h h'; i -> f(i) f'(h^{-1}(i))), products applying the
// right factor first throughout.
WreathElement w_multiply(const WreathElement& a, const WreathElement& b);
WreathElement w_inverse(const WreathElement& a);

// Action on pairs: (h; f)(i, j) = (h(i), f_{h(i)}(j)). 1-based.
std::pair<int, int> w_act(const WreathElement& a, int i, int j);

// One entry per cycle of the top, in leader order. The product collects the
// bottom factors backwards along the cycle starting at the leader:
// f(j) f(h^{-1}(j)) ... f(h^{-(l-1)}(j)).
struct CycleProduct {
  int leader = 0;
  int length = 0;
  Permutation product;
};
std::vector<CycleProduct> cycle_products(const WreathElement& a);

// Conjugacy data. `counts` maps (cycle type of the cycle product, top cycle
// length) to multiplicity; it is a class invariant but does not separate all
// classes when the top group is a proper subgroup of the full symmetric
// group. `canon` is the lexicographically smallest encoding of the element
// conjugated by (y; id) over all y in the top group, with every bottom factor
// reduced to the conjugacy class of its cycle product; it separates exactly.
struct WreathCycleType {
  std::vector<int> canon;
  std::map<std::pair<Partition, int>, int> counts;

  bool operator==(const WreathCycleType& o) const { return canon == o.canon; }
  bool operator<(const WreathCycleType& o) const { return canon < o.canon; }
  std::string to_string() const;
};

WreathCycleType w_cycle_type(const WreathElement& a, const TopGroup& top);
bool w_is_conjugate(const WreathElement& a, const WreathElement& b,
                    const TopGroup& top);

// Every element of top wr S_n, tops outermost; |top| n!^k elements in all.
// Throws if the total exceeds the bound.
std::vector<WreathElement> enumerate_wreath(const TopGroup& top, int n,
                                            long long bound = 10'000'000);
void for_each_wreath(const TopGroup& top, int n,
                     const std::function<void(const WreathElement&)>& fn,
                     long long bound = 10'000'000);

// "top=(1 3)(2 4); f1=(1 2); f2=id; f3=(1 2); f4=id"
std::string format_wreath(const WreathElement& a);
WreathElement parse_wreath(const std::string& text, int k, int n);

}  // namespace origami
