#include "doctest.h"

#include "origami/perm.hpp"
#include "origami/rng.hpp"
#include "origami/wreath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace origami;

namespace {

WreathElement random_wreath(const TopGroup& top, int n, std::mt19937_64& eng) {
  WreathElement e;
  e.top = top.elements()[bounded_uniform(eng, top.order())];
  for (int i = 0; i < top.degree(); ++i) e.bottom.push_back(random_permutation(n, eng));
  return e;
}

WreathElement w_power(const WreathElement& a, int l) {
  WreathElement r = w_identity(a.top_degree(), a.bottom_degree());
  for (int t = 0; t < l; ++t) r = w_multiply(r, a);
  return r;
}

// the wreath action as a permutation of pair indices (i-1)*n + j
Permutation embed(const WreathElement& e) {
  int k = e.top_degree(), n = e.bottom_degree();
  std::vector<int> img(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) {
      auto [ii, jj] = w_act(e, i, j);
      img[static_cast<std::size_t>((i - 1) * n + j - 1)] = (ii - 1) * n + jj;
    }
  return Permutation::from_images(img);
}

// conjugacy classes by exhaustive conjugation, as a class id per element
std::map<WreathElement, int> brute_classes(const std::vector<WreathElement>& all) {
  std::map<WreathElement, int> cls;
  int next = 0;
  for (const auto& x : all) {
    if (cls.count(x)) continue;
    int id = next++;
    for (const auto& g : all) {
      auto y = w_multiply(w_multiply(g, x), w_inverse(g));
      cls[y] = id;
    }
  }
  return cls;
}

}  // namespace

TEST_CASE("top group validation") {
  CHECK_THROWS(TopGroup::from_elements({Permutation::from_images({2, 1, 3})}));
  CHECK_THROWS(TopGroup::from_elements(
      {Permutation::identity(3), Permutation::from_images({2, 3, 1})}));
  auto c4 = TopGroup::cyclic4();
  CHECK(c4.degree() == 4);
  CHECK(c4.order() == 4);
  CHECK(c4.contains(parse_cycles("(1 3)(2 4)", 4)));
  CHECK(c4.contains(parse_cycles("(1 2 3 4)", 4)));
  CHECK(!c4.contains(parse_cycles("(1 2)", 4)));
  CHECK(c4.identity().is_identity());
  auto s3 = TopGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_THROWS(TopGroup::symmetric(9));
}

TEST_CASE("group axioms and the pair action embedding") {
  auto c4 = TopGroup::cyclic4();
  auto eng = make_stream(31, 0);
  int n = 4;
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_wreath(c4, n, eng);
    auto b = random_wreath(c4, n, eng);
    auto c = random_wreath(c4, n, eng);
    CHECK(w_multiply(w_multiply(a, b), c) == w_multiply(a, w_multiply(b, c)));
    auto e = w_identity(4, n);
    CHECK(w_multiply(a, e) == a);
    CHECK(w_multiply(e, a) == a);
    CHECK(w_multiply(a, w_inverse(a)) == e);
    CHECK(w_multiply(w_inverse(a), a) == e);
    // the pair action is a faithful homomorphism
    CHECK(embed(w_multiply(a, b)) == compose(embed(a), embed(b)));
    CHECK(embed(w_inverse(a)) == inverse(embed(a)));
  }
}

TEST_CASE("action on pairs") {
  auto e = parse_wreath("top=(1 2 3 4); f1=id; f2=(1 2); f3=id; f4=(2 3)", 4, 3);
  // (h;f)(i,j) = (h(i), f_{h(i)}(j))
  CHECK(w_act(e, 1, 1) == std::pair{2, 2});
  CHECK(w_act(e, 1, 3) == std::pair{2, 3});
  CHECK(w_act(e, 3, 2) == std::pair{4, 3});
  CHECK(w_act(e, 4, 1) == std::pair{1, 1});
  // identity fixes everything
  auto id = w_identity(4, 3);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(w_act(id, i, j) == std::pair{i, j});
}

TEST_CASE("cycle products match powers of the element") {
  auto c4 = TopGroup::cyclic4();
  auto eng = make_stream(37, 1);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(bounded_uniform(eng, 4));
    auto a = random_wreath(c4, n, eng);
    auto cps = cycle_products(a);
    // leaders ascend and lengths tile the top degree
    int total = 0;
    for (std::size_t v = 0; v + 1 < cps.size(); ++v) CHECK(cps[v].leader < cps[v + 1].leader);
    for (const auto& cp : cps) total += cp.length;
    CHECK(total == 4);
    for (const auto& cp : cps) {
      auto p = w_power(a, cp.length);
      CHECK(p.top.apply(cp.leader) == cp.leader);
      CHECK(p.bottom[static_cast<std::size_t>(cp.leader - 1)] == cp.product);
    }
  }
}

TEST_CASE("orbit count on pairs equals the cycle count of the products") {
  auto c4 = TopGroup::cyclic4();
  auto eng = make_stream(41, 2);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(bounded_uniform(eng, 4));
    auto a = random_wreath(c4, n, eng);
    int expected = 0;
    for (const auto& cp : cycle_products(a)) expected += cycle_count(cp.product);
    CHECK(cycle_count(embed(a)) == expected);
  }
}

TEST_CASE("conjugacy matches brute force over the cyclic top") {
  auto c4 = TopGroup::cyclic4();
  auto all = enumerate_wreath(c4, 2);
  REQUIRE(all.size() == 64);
  auto cls = brute_classes(all);
  std::set<int> ids;
  for (const auto& [e, id] : cls) ids.insert(id);
  CHECK(ids.size() == 13);

  std::map<WreathElement, WreathCycleType> types;
  for (const auto& e : all) types.emplace(e, w_cycle_type(e, c4));
  std::set<std::vector<int>> canons;
  std::set<std::map<std::pair<Partition, int>, int>> count_maps;
  for (const auto& [e, t] : types) {
    canons.insert(t.canon);
    count_maps.insert(t.counts);
  }
  // the canonical encoding separates the classes exactly
  CHECK(canons.size() == 13);
  // the (product class, length) multiset alone conflates some of them
  CHECK(count_maps.size() == 10);

  for (const auto& a : all)
    for (const auto& b : all)
      CHECK(w_is_conjugate(a, b, c4) == (cls.at(a) == cls.at(b)));
}

TEST_CASE("conjugacy over a full symmetric top is the count invariant") {
  auto s3 = TopGroup::symmetric(3);
  auto all = enumerate_wreath(s3, 2);
  REQUIRE(all.size() == 48);
  auto cls = brute_classes(all);
  std::set<int> ids;
  for (const auto& [e, id] : cls) ids.insert(id);
  CHECK(ids.size() == 10);

  std::set<std::vector<int>> canons;
  std::set<std::map<std::pair<Partition, int>, int>> count_maps;
  std::map<WreathElement, WreathCycleType> types;
  for (const auto& e : all) {
    auto t = w_cycle_type(e, s3);
    canons.insert(t.canon);
    count_maps.insert(t.counts);
    types.emplace(e, std::move(t));
  }
  CHECK(canons.size() == 10);
  CHECK(count_maps.size() == 10);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK((types.at(a).counts == types.at(b).counts) == (cls.at(a) == cls.at(b)));
}

TEST_CASE("conjugation preserves the reported type") {
  auto c4 = TopGroup::cyclic4();
  auto eng = make_stream(43, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(bounded_uniform(eng, 3));
    auto a = random_wreath(c4, n, eng);
    auto g = random_wreath(c4, n, eng);
    auto conj = w_multiply(w_multiply(g, a), w_inverse(g));
    CHECK(w_cycle_type(a, c4) == w_cycle_type(conj, c4));
    CHECK(w_cycle_type(a, c4).counts == w_cycle_type(conj, c4).counts);
    CHECK(w_is_conjugate(a, conj, c4));
  }
}

TEST_CASE("enumeration is complete, distinct and bounded") {
  auto c4 = TopGroup::cyclic4();
  auto all = enumerate_wreath(c4, 2);
  std::set<WreathElement> dedup(all.begin(), all.end());
  CHECK(dedup.size() == 64);
  long long count = 0;
  for_each_wreath(c4, 2, [&count](const WreathElement&) { ++count; });
  CHECK(count == 64);
  CHECK_THROWS(enumerate_wreath(c4, 6, 1000));
  CHECK_THROWS(for_each_wreath(c4, 8, [](const WreathElement&) {}, 10'000'000));
}

TEST_CASE("text form round-trips") {
  auto c4 = TopGroup::cyclic4();
  auto eng = make_stream(47, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(bounded_uniform(eng, 5));
    auto a = random_wreath(c4, n, eng);
    CHECK(parse_wreath(format_wreath(a), 4, n) == a);
  }
  auto id = w_identity(2, 2);
  CHECK(format_wreath(id) == "top=id; f1=id; f2=id");
  CHECK_THROWS(parse_wreath("top=id; f1=id", 2, 2));
  CHECK_THROWS(parse_wreath("top=id; g1=id; f2=id", 2, 2));
  CHECK_THROWS(parse_wreath("top=(1 2); f1=(1 5); f2=id", 2, 2));
}

TEST_CASE("cycle type text") {
  auto c4 = TopGroup::cyclic4();
  auto id = w_identity(4, 2);
  auto t = w_cycle_type(id, c4);
  CHECK(t.counts.size() == 1);
  CHECK(t.counts.at({Partition({1, 1}), 1}) == 4);
  CHECK(t.to_string() == "(1+1|1)^4");
  auto e = parse_wreath("top=(1 2 3 4); f1=(1 2); f2=id; f3=id; f4=id", 4, 2);
  CHECK(w_cycle_type(e, c4).to_string() == "(2|4)");
}
