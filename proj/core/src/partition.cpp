#include "origami/partition.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace origami {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

static void emit_partitions(int rest, int cap, std::vector<int>& cur,
                            std::vector<Partition>& out) {
  if (rest == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int k = std::min(rest, cap); k >= 1; --k) {
    cur.push_back(k);
    emit_partitions(rest - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be non-negative");
  if (n > max_n) throw std::invalid_argument("partitions: n exceeds bound " + std::to_string(max_n));
  std::vector<Partition> out;
  std::vector<int> cur;
  emit_partitions(n, n, cur, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  int cols = lambda.parts[0];
  out.parts.reserve(cols);
  for (int j = 1; j <= cols; ++j) {
    int c = 0;
    for (int p : lambda.parts) c += p >= j ? 1 : 0;
    out.parts.push_back(c);
  }
  return out;
}

Integer sn_class_size(int n, const Partition& rho) {
  if (rho.weight() != n) throw std::invalid_argument("class size: cycle type must partition n");
  std::map<int, int> mult;
  for (int k : rho.parts) ++mult[k];
  Integer denom = 1;
  for (auto [k, a] : mult) {
    for (int i = 0; i < a; ++i) denom *= k;
    denom *= factorial(a);
  }
  return factorial(n) / denom;
}

std::string partition_to_string(const Partition& lambda) {
  if (lambda.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(lambda.parts[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty partition text; the empty partition is \"0\"");
  if (text == "0") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse partition part '" + tok + "'");
    }
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace origami
