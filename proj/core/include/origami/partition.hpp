#pragma once

#include "origami/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace origami {

// Integer partition, parts weakly decreasing and positive. The empty
// partition is the unique partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < rows() ? parts[i] : 0; }  // 0-based row
  bool empty() const { return parts.empty(); }

  bool operator==(const Partition&) const = default;
  // Lexicographic on the part sequences; (3,1) > (2,2) > (2,1,1).
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts <=> o.parts;
  }
};

// All partitions of n, largest-first lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n, int max_n = 30);

Partition conjugate(const Partition& lambda);

// Size of the conjugacy class of S_n with cycle type rho: n! / prod k^{a_k} a_k!.
Integer sn_class_size(int n, const Partition& rho);

// "3+1+1"; the empty partition prints as "0".
std::string partition_to_string(const Partition& lambda);
Partition parse_partition(const std::string& text);

}  // namespace origami
