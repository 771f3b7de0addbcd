#include "origami/perm.hpp"

#include "origami/rng.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace origami {

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
  Permutation p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  Permutation p;
  const int n = static_cast<int>(one_based.size());
  p.img_.resize(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = one_based[i];
    if (v < 1 || v > n) throw std::invalid_argument("image out of range");
    if (seen[v - 1]) throw std::invalid_argument("duplicate image");
    seen[v - 1] = 1;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::unchecked(std::vector<int> zero_based) {
  Permutation p;
  p.img_ = std::move(zero_based);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p.image0(q.image0(i));
  return Permutation::unchecked(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p.image0(i)] = i;
  return Permutation::unchecked(std::move(img));
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("commutator: degree mismatch");
  const int n = p.degree();
  std::vector<int> pinv(n), qinv(n);
  for (int i = 0; i < n; ++i) pinv[p.image0(i)] = i;
  for (int i = 0; i < n; ++i) qinv[q.image0(i)] = i;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = p.image0(q.image0(pinv[qinv[i]]));
  return Permutation::unchecked(std::move(img));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = 1;
      cyc.push_back(j + 1);
      j = p.image0(j);
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

int cycle_count(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p.image0(j)) seen[j] = 1;
  }
  return c;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int sign(const Permutation& p) { return (p.degree() - cycle_count(p)) % 2 == 0 ? 1 : -1; }

Permutation permutation_of_type(const Partition& rho) {
  std::vector<int> img(static_cast<std::size_t>(rho.weight()));
  int base = 0;
  for (const int part : rho.parts) {
    for (int i = 0; i < part; ++i) {
      img[static_cast<std::size_t>(base + i)] = base + (i + 1) % part + 1;
    }
    base += part;
  }
  return Permutation::from_images(img);
}

std::string format_cycles(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 0) throw std::invalid_argument("parse_cycles: bad degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
    if (text.substr(pos, 2) == "id") {
      pos += 2;
      skip_ws();
      if (pos == text.size()) return Permutation::unchecked(std::move(img));
    }
    throw std::invalid_argument("cannot parse permutation '" + text + "'");
  }
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cyc;  // 0-based symbols of one cycle
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t len = 0;
      int v;
      try {
        v = std::stoi(text.substr(pos), &len);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad symbol in '" + text + "'");
      }
      pos += len;
      if (v < 1 || v > degree)
        throw std::invalid_argument("symbol " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(degree));
      if (used[v - 1]) throw std::invalid_argument("symbol " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::unchecked(std::move(img));
}

bool is_transitive(std::span<const Permutation> generators, int n) {
  if (n <= 0) throw std::invalid_argument("is_transitive: n must be positive");
  for (const auto& g : generators)
    if (g.degree() != n) throw std::invalid_argument("is_transitive: degree mismatch");
  // Forward images suffice: g^-1 = g^(ord(g)-1), so the monoid orbit is the
  // group orbit.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int y = g.image0(x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

Permutation random_permutation(int n, std::mt19937_64& eng) {
  if (n <= 0) throw std::invalid_argument("random_permutation: n must be positive");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(bounded_uniform(eng, static_cast<std::uint64_t>(i) + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation::unchecked(std::move(img));
}

}  // namespace origami
