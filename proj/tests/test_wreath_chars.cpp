#include "doctest.h"

#include "origami/numeric.hpp"
#include "origami/partition.hpp"
#include "origami/perm.hpp"
#include "origami/rng.hpp"
#include "origami/wreath.hpp"
#include "origami/wreath_chars.hpp"
#include "origami/young.hpp"

#include <map>
#include <set>
#include <vector>

using namespace origami;

namespace {

// the dotted character of the induction formula, straight from its definition
GaussianRational dotted(const WreathIrrep& D, const WreathElement& y) {
  int power = c4_power(y.top);
  bool inside = D.inertia == Inertia::C4 || (D.inertia == Inertia::C2 && power % 2 == 0) ||
                (D.inertia == Inertia::Trivial && power == 0);
  if (!inside) return {};
  GaussianRational top_value{Rational(1), Rational(0)};
  if (D.inertia == Inertia::C4) top_value = c4_character(D.top_char, power);
  if (D.inertia == Inertia::C2 && D.top_char == 2 && power == 2)
    top_value = GaussianRational{Rational(-1), Rational(0)};
  return top_value *
         Rational(extended_character(std::span<const Partition>(D.base.data(), 4), y));
}

// literal induction average over the whole group
GaussianRational averaged_character(const WreathIrrep& D, const WreathElement& e,
                                    const std::vector<WreathElement>& group) {
  GaussianRational acc;
  for (const auto& x : group) acc += dotted(D, w_multiply(w_multiply(x, e), w_inverse(x)));
  Integer denom = inertia_order(D.inertia);
  for (int i = 0; i < 4; ++i) denom *= factorial(e.bottom_degree());
  return acc / Rational(denom);
}

Rational real_part(const GaussianRational& g) {
  REQUIRE(g.is_real());
  return g.re;
}

}  // namespace

TEST_CASE("cyclic top character table") {
  // rows exactly as printed: chi^2 = (1, i, -1, -i), chi^4 = (1, -i, -1, i)
  GaussianRational i = GaussianRational::unit_i();
  GaussianRational one{Rational(1), Rational(0)};
  GaussianRational minus{Rational(-1), Rational(0)};
  for (int p = 0; p < 4; ++p) CHECK(c4_character(1, p) == one);
  CHECK(c4_character(2, 1) == i);
  CHECK(c4_character(2, 2) == minus);
  CHECK(c4_character(2, 3) == GaussianRational{Rational(0), Rational(-1)});
  CHECK(c4_character(3, 1) == minus);
  CHECK(c4_character(3, 2) == one);
  CHECK(c4_character(4, 1) == GaussianRational{Rational(0), Rational(-1)});
  CHECK(c4_character(4, 2) == minus);
  CHECK(c4_character(4, 3) == i);
  CHECK(c4_character(2, parse_cycles("(1 3)(2 4)", 4)) == minus);
  CHECK(c4_character(4, parse_cycles("(1 4 3 2)", 4)) == i);
  // orthonormal rows
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      GaussianRational dot;
      for (int p = 0; p < 4; ++p) dot += c4_character(a, p) * c4_character(b, p).conj();
      CHECK(dot == GaussianRational{Rational(a == b ? 4 : 0), Rational(0)});
    }
  CHECK_THROWS(c4_character(0, 1));
  CHECK_THROWS(c4_character(5, 1));
  CHECK_THROWS(c4_power(parse_cycles("(1 2)", 4)));
  CHECK_THROWS(c4_power(parse_cycles("(1 2)", 2)));
  CHECK(c4_power(parse_cycles("(1 2 3 4)", 4)) == 1);
  CHECK(c4_power(Permutation::identity(4)) == 0);
}

TEST_CASE("inertia and canonical rotation") {
  Partition a({2}), b({1, 1});
  CHECK(inertia_of({a, a, a, a}) == Inertia::C4);
  CHECK(inertia_of({a, b, a, b}) == Inertia::C2);
  CHECK(inertia_of({a, a, b, b}) == Inertia::Trivial);
  CHECK(inertia_order(Inertia::C4) == 4);
  CHECK(inertia_order(Inertia::C2) == 2);
  CHECK(inertia_order(Inertia::Trivial) == 1);
  CHECK(inertia_index(Inertia::C2) == 2);

  // parts compare lexicographically, so [1,1] precedes [2]
  BaseTuple t{a, b, a, a};
  auto canon = canonical_rotation(t);
  CHECK(canon == BaseTuple{b, a, a, a});
  // rotations all map to the same canonical tuple
  for (int s = 0; s < 4; ++s) {
    BaseTuple rot;
    for (int i = 0; i < 4; ++i) rot[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>((i + s) % 4)];
    CHECK(canonical_rotation(rot) == canon);
  }
  // inertia is rotation independent
  CHECK(inertia_of(t) == inertia_of(canon));
}

TEST_CASE("extended character on mixed-degree tops") {
  // top (1 3 2) of degree 3 with factors in S_4, base [2,2] three times:
  // single cycle product (1 2)(1 2)(3 4) = (3 4), a transposition, where
  // the [2,2] character vanishes
  auto e = parse_wreath("top=(1 3 2); f1=(1 2); f2=id; f3=(1 2)(3 4)", 3, 4);
  std::vector<Partition> base22(3, Partition({2, 2}));
  CHECK(extended_character(base22, e) == 0);

  // top (1 2) of degree 3 with factors in S_3, base ([2,1],[2,1],[1^3]):
  // cycle products (1 2) on the 2-cycle and (1 2 3) on the fixed point
  auto e2 = parse_wreath("top=(1 2); f1=(1 2); f2=id; f3=(1 2 3)", 3, 3);
  std::vector<Partition> mixed{Partition({2, 1}), Partition({2, 1}), Partition({1, 1, 1})};
  CHECK(extended_character(mixed, e2) == 0);
  // the same element with the 3-cycle factor moved onto the 2-cycle is
  // rejected: the base is not constant there
  std::vector<Partition> bad{Partition({2, 1}), Partition({1, 1, 1}), Partition({2, 1})};
  CHECK_THROWS(extended_character(bad, e2));

  // identity element: product of dimensions
  std::vector<Partition> base21(4, Partition({2, 1}));
  CHECK(extended_character(base21, w_identity(4, 3)) == 16);
  // all-trivial base gives 1 everywhere
  auto eng = make_stream(53, 0);
  std::vector<Partition> trivial(4, Partition({3}));
  auto c4 = TopGroup::cyclic4();
  for (int t = 0; t < 10; ++t) {
    WreathElement w;
    w.top = c4.elements()[bounded_uniform(eng, 4)];
    for (int i = 0; i < 4; ++i) w.bottom.push_back(random_permutation(3, eng));
    CHECK(extended_character(trivial, w) == 1);
  }
}

TEST_CASE("irrep characters match the literal induction average") {
  auto sys = irreducible_system(2);
  auto group = enumerate_wreath(TopGroup::cyclic4(), 2);
  REQUIRE(group.size() == 64);
  for (const auto& D : sys.irreps())
    for (const auto& rep : sys.class_reps())
      CHECK(irrep_character(D, rep) == averaged_character(D, rep, group));
}

TEST_CASE("small systems have the right shape") {
  auto s1 = irreducible_system(1);
  CHECK(s1.order() == 4);
  CHECK(s1.irreps().size() == 4);
  CHECK(s1.class_count() == 4);
  for (const auto& d : s1.irreps()) CHECK(d.dim == 1);

  auto s2 = irreducible_system(2);
  CHECK(s2.order() == 64);
  CHECK(s2.irreps().size() == 13);
  CHECK(s2.class_count() == 13);
  int diagonal = 0;
  for (const auto& d : s2.irreps())
    if (d.inertia == Inertia::C4) ++diagonal;
  CHECK(diagonal == 8);
  Integer dim_sq = 0, covered = 0;
  for (const auto& d : s2.irreps()) dim_sq += d.dim * d.dim;
  for (const auto& s : s2.class_sizes()) covered += s;
  CHECK(dim_sq == 64);
  CHECK(covered == 64);
  CHECK(s2.identity_class() == 0);
  CHECK(s2.class_reps()[0] == w_identity(4, 2));

  auto s3 = irreducible_system(3);
  CHECK(s3.order() == 5184);
  CHECK(s3.irreps().size() == 36);
  CHECK(s3.class_count() == 36);
  Integer sq3 = 0;
  for (const auto& d : s3.irreps()) sq3 += d.dim * d.dim;
  CHECK(sq3 == 5184);

  CHECK_THROWS(irreducible_system(4));
  CHECK_THROWS(irreducible_system(0));
  CHECK_THROWS(irreducible_system(16, TableMode::DiagonalOnly));
}

TEST_CASE("diagonal-only systems") {
  auto d6 = irreducible_system(6, TableMode::DiagonalOnly);
  CHECK(d6.irreps().size() == 4 * partitions(6).size());
  CHECK(!d6.has_classes());
  CHECK_THROWS(d6.class_count());
  CHECK_THROWS(d6.class_reps());
  for (const auto& d : d6.irreps()) {
    CHECK(d.inertia == Inertia::C4);
    Integer f = f_lambda(d.base[0]);
    CHECK(d.dim == f * f * f * f);
  }
  CHECK(d6.to_json().find("\"diagonal\"") != std::string::npos);
}

TEST_CASE("character tables are orthonormal") {
  for (int n : {2, 3}) {
    auto sys = irreducible_system(n);
    std::size_t m = sys.class_count();
    for (std::size_t a = 0; a < sys.irreps().size(); ++a)
      for (std::size_t b = a; b < sys.irreps().size(); ++b) {
        GaussianRational dot;
        for (std::size_t c = 0; c < m; ++c)
          dot += sys.value(a, c) * sys.value(b, c).conj() * Rational(sys.class_sizes()[c]);
        GaussianRational expect{Rational(a == b ? sys.order() : Integer(0)), Rational(0)};
        CHECK(dot == expect);
      }
    // column orthogonality: identity column against any other
    for (std::size_t c = 1; c < m; ++c) {
      GaussianRational dot;
      for (std::size_t d = 0; d < sys.irreps().size(); ++d)
        dot += sys.value(d, 0) * sys.value(d, c).conj();
      CHECK(dot == GaussianRational{});
    }
  }
}

TEST_CASE("class sizes of the sigma and tau shapes") {
  for (int n : {1, 2, 3}) {
    auto sys = irreducible_system(n);
    WreathElement sigma0 = w_identity(4, n);
    sigma0.top = parse_cycles("(1 3)(2 4)", 4);
    WreathElement tau0 = w_identity(4, n);
    tau0.top = parse_cycles("(1 2 3 4)", 4);
    Integer nf = factorial(n);
    CHECK(sys.class_sizes()[sys.class_index(sigma0)] == nf * nf);
    CHECK(sys.class_sizes()[sys.class_index(tau0)] == nf * nf * nf);
  }
}

TEST_CASE("frobenius counts against brute force in the symmetric group") {
  auto t3 = character_table(3);
  // x y = id with x, y transpositions forces y = x
  CHECK(frobenius_count(t3, Partition({2, 1}), Partition({2, 1}), Permutation::identity(3)) == 3);
  // x y = (1 2): x transposition, y 3-cycle
  CHECK(frobenius_count(t3, Partition({2, 1}), Partition({3}), parse_cycles("(1 2)", 3)) == 2);

  // exhaustive cross-check on S_4
  auto t4 = character_table(4);
  std::vector<Permutation> s4;
  {
    std::vector<int> img{1, 2, 3, 4};
    do {
      s4.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  auto zs = {Permutation::identity(4), parse_cycles("(1 2)", 4), parse_cycles("(1 2 3)", 4),
             parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)(3 4)", 4)};
  for (const auto& c1 : partitions(4))
    for (const auto& c2 : partitions(4))
      for (const auto& z : zs) {
        Integer brute = 0;
        for (const auto& x : s4)
          for (const auto& y : s4)
            if (cycle_type(x) == c1 && cycle_type(y) == c2 && compose(x, y) == z) ++brute;
        CHECK(frobenius_count(t4, c1, c2, z) == brute);
      }
}

TEST_CASE("frobenius counts against brute force in the wreath group") {
  auto sys = irreducible_system(2);
  auto group = enumerate_wreath(TopGroup::cyclic4(), 2);
  WreathElement sigma0 = w_identity(4, 2);
  sigma0.top = parse_cycles("(1 3)(2 4)", 4);
  WreathElement tau0 = w_identity(4, 2);
  tau0.top = parse_cycles("(1 2 3 4)", 4);
  std::size_t cs = sys.class_index(sigma0);
  std::size_t ct = sys.class_index(tau0);

  auto in_class = [&sys](std::size_t cls, const WreathElement& e) {
    return sys.class_index(e) == cls;
  };
  auto zs = {w_identity(4, 2), parse_wreath("top=(1 4 3 2); f1=(1 2); f2=(1 2); f3=(1 2); f4=(1 2)", 4, 2),
             parse_wreath("top=(1 4 3 2); f1=id; f2=id; f3=id; f4=id", 4, 2),
             parse_wreath("top=(1 3)(2 4); f1=(1 2); f2=id; f3=id; f4=id", 4, 2)};
  for (const auto& z : zs) {
    Integer brute = 0;
    for (const auto& x : group)
      for (const auto& y : group)
        if (in_class(cs, x) && in_class(ct, y) && w_multiply(x, y) == z) ++brute;
    CHECK(frobenius_count(sys, cs, ct, z) == brute);
  }
}

TEST_CASE("sigma tau probability equals exhaustive counting at n = 2") {
  auto sys = irreducible_system(2);
  auto group = enumerate_wreath(TopGroup::cyclic4(), 2);
  WreathElement sigma0 = w_identity(4, 2);
  sigma0.top = parse_cycles("(1 3)(2 4)", 4);
  WreathElement tau0 = w_identity(4, 2);
  tau0.top = parse_cycles("(1 2 3 4)", 4);
  std::size_t cs = sys.class_index(sigma0);
  std::size_t ct = sys.class_index(tau0);

  std::vector<WreathElement> class_s, class_t;
  for (const auto& e : group) {
    if (sys.class_index(e) == cs) class_s.push_back(e);
    if (sys.class_index(e) == ct) class_t.push_back(e);
  }
  REQUIRE(class_s.size() == 4);
  REQUIRE(class_t.size() == 8);

  Rational total(0);
  for (const auto& z : group) {
    Integer brute = 0;
    for (const auto& s : class_s)
      for (const auto& t : class_t)
        if (w_multiply(s, t) == z) ++brute;
    Rational p = sigma_tau_probability(z, sys);
    CHECK(p == Rational(brute, 32));
    total += p;
  }
  CHECK(total == 1);

  // probability vanishes off the (1 4 3 2) top
  CHECK(sigma_tau_probability(w_identity(4, 2), sys) == 0);
  CHECK(sigma_tau_probability(sigma0, sys) == 0);
  // the example pair: all bottoms (1 2) arises from exactly one (a, b) pair
  auto pi = parse_wreath("top=(1 4 3 2); f1=(1 2); f2=(1 2); f3=(1 2); f4=(1 2)", 4, 2);
  Integer hits = 0;
  for (const auto& s : class_s)
    if (w_multiply(s, tau0) == pi) ++hits;
  CHECK(hits == 1);
}

TEST_CASE("reduced probability agrees with the full character sum") {
  CHECK(reduced_probability(1, Partition({1})) == 1);
  CHECK(reduced_probability(2, Partition({1, 1})) == Rational(1, 8));
  for (int n : {1, 2, 3}) {
    auto sys = irreducible_system(n);
    for (std::size_t c = 0; c < sys.class_count(); ++c) {
      const auto& rep = sys.class_reps()[c];
      if (rep.top != parse_cycles("(1 4 3 2)", 4)) continue;
      auto cps = cycle_products(rep);
      REQUIRE(cps.size() == 1);
      CHECK(sigma_tau_probability(rep, sys) ==
            reduced_probability(n, cycle_type(cps.front().product)));
    }
  }
  // total probability over all elements with the (1 4 3 2) top: the bottoms
  // carrying a product of type rho number n!^3 |C_rho|
  for (int n = 1; n <= 8; ++n) {
    Rational total(0);
    Integer cube = factorial(n) * factorial(n) * factorial(n);
    for (const auto& rho : partitions(n))
      total += Rational(cube * sn_class_size(n, rho)) * reduced_probability(n, rho);
    CHECK(total == 1);
  }
  CHECK_THROWS(reduced_probability(3, Partition({2})));
}

TEST_CASE("reduced probability matches the commutator distribution of pairs") {
  // #{(a,b) in S_n^2 : [a,b] of type rho} = n! |C_rho| n!^4 reduced(rho)
  for (int n = 2; n <= 5; ++n) {
    std::vector<Permutation> sn;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do {
      sn.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));

    std::map<Partition, Integer> counts;
    for (const auto& a : sn)
      for (const auto& b : sn) ++counts[cycle_type(commutator(a, b))];

    Integer nf4 = factorial(n) * factorial(n) * factorial(n) * factorial(n);
    for (const auto& rho : partitions(n)) {
      Integer brute = counts.count(rho) ? counts[rho] : Integer(0);
      Rational expect = Rational(factorial(n) * sn_class_size(n, rho) * nf4) *
                        reduced_probability(n, rho);
      CHECK(Rational(brute) == expect);
    }
  }
}

TEST_CASE("refined probability reconstructs the reduced value") {
  for (int n = 4; n <= 8; ++n) {
    Integer nf4 = factorial(n) * factorial(n) * factorial(n) * factorial(n);
    for (const auto& rho : partitions(n)) {
      auto split = refined_probability(n, rho);
      CHECK(split.total() == reduced_probability(n, rho));
      // leading term from the four extracted characters, by hand
      int fixed = 0;
      for (int part : rho.parts)
        if (part == 1) ++fixed;
      int sgn = ((n - rho.rows()) % 2 == 0) ? 1 : -1;
      Rational lead = Rational(1 + sgn) * (Rational(1) + Rational(fixed - 1, n - 1)) /
                      Rational(nf4);
      CHECK(split.leading == lead);
    }
  }
  // odd pi-prime kills the leading term
  auto odd = refined_probability(4, Partition({2, 1, 1}));
  CHECK(odd.leading == 0);
  // n = 5, pi' a 5-cycle: (1/5!^4) * 2 * (1 - 1/4)
  auto five = refined_probability(5, Partition({5}));
  Integer f5 = factorial(5);
  CHECK(five.leading == Rational(3, 2) / Rational(f5 * f5 * f5 * f5));
  CHECK_THROWS(refined_probability(3, Partition({3})));

  // permutation-level entry points agree with the type-level ones
  auto p = parse_cycles("(1 2 3 4 5)", 8);
  CHECK(reduced_probability(p) == reduced_probability(8, cycle_type(p)));
  CHECK(refined_probability(p).total() == refined_probability(8, cycle_type(p)).total());
}

TEST_CASE("table export shapes") {
  auto sys = irreducible_system(2);
  auto csv = sys.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 14);  // header + 13 rows
  auto js = sys.to_json();
  CHECK(js.find("\"order\": \"64\"") != std::string::npos);
  CHECK(js.find("\"values\"") != std::string::npos);
}
