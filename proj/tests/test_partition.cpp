#include "doctest.h"

#include "origami/numeric.hpp"
#include "origami/partition.hpp"

#include <set>

using namespace origami;

namespace {

// independent p(n) via the Euler recurrence with pentagonal numbers
Integer partition_number(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Integer term = 0;
      if (g1 <= m) term += p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("partition enumeration matches the pentagonal recurrence") {
  for (int n = 0; n <= 20; ++n) {
    auto all = partitions(n);
    CHECK(Integer(all.size()) == partition_number(n));
    std::set<Partition> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const auto& lam : all) CHECK(lam.weight() == n);
  }
  CHECK(partitions(0).size() == 1);   // the empty partition
  CHECK(partitions(5).size() == 7);
}

TEST_CASE("partition enumeration is reverse lexicographic, largest first") {
  auto all = partitions(4);
  REQUIRE(all.size() == 5);
  CHECK(all[0].parts == std::vector<int>{4});
  CHECK(all[1].parts == std::vector<int>{3, 1});
  CHECK(all[2].parts == std::vector<int>{2, 2});
  CHECK(all[3].parts == std::vector<int>{2, 1, 1});
  CHECK(all[4].parts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition validation") {
  CHECK_THROWS(Partition({2, 3}));
  CHECK_THROWS(Partition({3, 0}));
  CHECK_THROWS(Partition({-1}));
  CHECK_NOTHROW(Partition({3, 3, 1}));
}

TEST_CASE("conjugate partitions") {
  CHECK(conjugate(Partition({4, 2, 1})).parts == std::vector<int>{3, 2, 1, 1});
  CHECK(conjugate(conjugate(Partition({5, 3, 3, 1}))) == Partition({5, 3, 3, 1}));
  CHECK(conjugate(Partition{}).parts.empty());
  CHECK(conjugate(Partition({3})).parts == std::vector<int>{1, 1, 1});
}

TEST_CASE("symmetric group class sizes") {
  // sizes over all classes sum to n!
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& rho : partitions(n)) total += sn_class_size(n, rho);
    CHECK(total == factorial(n));
  }
  CHECK(sn_class_size(4, Partition({2, 1, 1})) == 6);       // transpositions
  CHECK(sn_class_size(4, Partition({4})) == 6);             // 4-cycles
  CHECK(sn_class_size(4, Partition({2, 2})) == 3);
  CHECK(sn_class_size(5, Partition({3, 2})) == 20);
  CHECK(sn_class_size(5, Partition({1, 1, 1, 1, 1})) == 1);
}

TEST_CASE("partition text round-trip") {
  CHECK(partition_to_string(Partition({3, 1, 1})) == "3+1+1");
  CHECK(partition_to_string(Partition{}) == "0");
  CHECK(parse_partition("3+1+1") == Partition({3, 1, 1}));
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("7") == Partition({7}));
  CHECK_THROWS(parse_partition("1+3"));
  CHECK_THROWS(parse_partition(""));
  CHECK_THROWS(parse_partition("2+x"));
}
