#include "origami/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace origami {

TopGroup TopGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw std::invalid_argument("top group needs at least the identity");
  int k = elements.front().degree();
  for (const auto& e : elements)
    if (e.degree() != k) throw std::invalid_argument("top group elements of mixed degree");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::set<Permutation> members(elements.begin(), elements.end());
  if (!members.count(Permutation::identity(k)))
    throw std::invalid_argument("top group misses the identity");
  for (const auto& a : elements) {
    if (!members.count(inverse(a)))
      throw std::invalid_argument("top group not closed under inverses");
    for (const auto& b : elements)
      if (!members.count(compose(a, b)))
        throw std::invalid_argument("top group not closed under composition");
  }

  TopGroup g;
  g.elements_ = std::move(elements);
  g.degree_ = k;
  return g;
}

TopGroup TopGroup::cyclic4() {
  Permutation c = Permutation::from_images({2, 3, 4, 1});
  std::vector<Permutation> elems{Permutation::identity(4)};
  for (int p = 1; p < 4; ++p) elems.push_back(compose(c, elems.back()));
  return from_elements(std::move(elems));
}

TopGroup TopGroup::symmetric(int k) {
  if (k < 1 || k > 8) throw std::invalid_argument("symmetric top group limited to degree 8");
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> elems;
  do {
    elems.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return from_elements(std::move(elems));
}

const Permutation& TopGroup::identity() const {
  // sorted order puts the identity first
  return elements_.front();
}

bool TopGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

WreathElement w_identity(int k, int n) {
  return {Permutation::identity(k),
          std::vector<Permutation>(static_cast<std::size_t>(k), Permutation::identity(n))};
}

static void check_compatible(const WreathElement& a, const WreathElement& b) {
  if (a.top_degree() != b.top_degree() || a.bottom_degree() != b.bottom_degree())
    throw std::invalid_argument("wreath elements of different shape");
}

static void check_shape(const WreathElement& a) {
  if (a.top.degree() != static_cast<int>(a.bottom.size()))
    throw std::invalid_argument("wreath element needs one bottom factor per position");
  for (const auto& f : a.bottom)
    if (f.degree() != a.bottom_degree())
      throw std::invalid_argument("wreath bottom factors of mixed degree");
}

WreathElement w_multiply(const WreathElement& a, const WreathElement& b) {
  check_shape(a);
  check_shape(b);
  check_compatible(a, b);
  int k = a.top_degree();
  Permutation a_inv = inverse(a.top);
  WreathElement out;
  out.top = compose(a.top, b.top);
  out.bottom.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    out.bottom.push_back(compose(a.bottom[static_cast<std::size_t>(i - 1)],
                                 b.bottom[static_cast<std::size_t>(a_inv.apply(i) - 1)]));
  return out;
}

WreathElement w_inverse(const WreathElement& a) {
  check_shape(a);
  int k = a.top_degree();
  WreathElement out;
  out.top = inverse(a.top);
  out.bottom.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    out.bottom.push_back(inverse(a.bottom[static_cast<std::size_t>(a.top.apply(i) - 1)]));
  return out;
}

std::pair<int, int> w_act(const WreathElement& a, int i, int j) {
  int ti = a.top.apply(i);
  return {ti, a.bottom[static_cast<std::size_t>(ti - 1)].apply(j)};
}

std::vector<CycleProduct> cycle_products(const WreathElement& a) {
  check_shape(a);
  Permutation h_inv = inverse(a.top);
  std::vector<CycleProduct> out;
  for (const auto& cyc : cycles(a.top)) {
    CycleProduct cp;
    cp.leader = cyc.front();
    cp.length = static_cast<int>(cyc.size());
    int pos = cp.leader;
    cp.product = a.bottom[static_cast<std::size_t>(pos - 1)];
    for (int step = 1; step < cp.length; ++step) {
      pos = h_inv.apply(pos);
      cp.product = compose(cp.product, a.bottom[static_cast<std::size_t>(pos - 1)]);
    }
    out.push_back(std::move(cp));
  }
  return out;
}

// encoding of (y; id) a (y; id)^{-1} = (y h y^{-1}; i -> f(y^{-1}(i))) with
// each bottom factor flattened to the cycle type of its cycle product
static std::vector<int> conjugated_encoding(const WreathElement& a, const Permutation& y) {
  Permutation y_inv = inverse(y);
  WreathElement conj;
  conj.top = compose(compose(y, a.top), y_inv);
  int k = a.top_degree();
  conj.bottom.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    conj.bottom.push_back(a.bottom[static_cast<std::size_t>(y_inv.apply(i) - 1)]);

  std::vector<int> code;
  for (int i = 1; i <= k; ++i) code.push_back(conj.top.apply(i));
  for (const auto& cp : cycle_products(conj)) {
    code.push_back(cp.length);
    for (int part : cycle_type(cp.product).parts) code.push_back(part);
    code.push_back(-1);
  }
  return code;
}

WreathCycleType w_cycle_type(const WreathElement& a, const TopGroup& top) {
  check_shape(a);
  if (top.degree() != a.top_degree())
    throw std::invalid_argument("top group degree does not match the element");
  if (!top.contains(a.top))
    throw std::invalid_argument("element top outside the top group");

  WreathCycleType t;
  for (const auto& cp : cycle_products(a))
    ++t.counts[{cycle_type(cp.product), cp.length}];

  bool first = true;
  for (const auto& y : top.elements()) {
    auto code = conjugated_encoding(a, y);
    if (first || code < t.canon) {
      t.canon = std::move(code);
      first = false;
    }
  }
  return t;
}

bool w_is_conjugate(const WreathElement& a, const WreathElement& b, const TopGroup& top) {
  if (a.top_degree() != b.top_degree() || a.bottom_degree() != b.bottom_degree()) return false;
  return w_cycle_type(a, top).canon == w_cycle_type(b, top).canon;
}

std::string WreathCycleType::to_string() const {
  std::ostringstream os;
  bool outer = true;
  for (const auto& [key, mult] : counts) {
    if (!outer) os << " ";
    outer = false;
    os << "(" << partition_to_string(key.first) << "|" << key.second << ")";
    if (mult > 1) os << "^" << mult;
  }
  if (outer) os << "()";
  return os.str();
}

static std::vector<Permutation> all_of_sn(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

void for_each_wreath(const TopGroup& top, int n,
                     const std::function<void(const WreathElement&)>& fn,
                     long long bound) {
  if (n < 1) throw std::invalid_argument("bottom degree must be positive");
  int k = top.degree();
  auto sn = all_of_sn(n);
  long long total = static_cast<long long>(top.order());
  for (int i = 0; i < k; ++i) {
    if (total > bound / static_cast<long long>(sn.size()) + 1)
      throw std::invalid_argument("wreath enumeration exceeds the element bound");
    total *= static_cast<long long>(sn.size());
  }
  if (total > bound) throw std::invalid_argument("wreath enumeration exceeds the element bound");

  WreathElement e;
  e.bottom.resize(static_cast<std::size_t>(k), sn.front());
  std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
  for (const auto& t : top.elements()) {
    e.top = t;
    std::fill(digits.begin(), digits.end(), 0);
    for (auto& f : e.bottom) f = sn.front();
    for (;;) {
      fn(e);
      // odometer over the bottom factors, last position fastest
      int pos = k - 1;
      while (pos >= 0) {
        auto& d = digits[static_cast<std::size_t>(pos)];
        if (++d < sn.size()) {
          e.bottom[static_cast<std::size_t>(pos)] = sn[d];
          break;
        }
        d = 0;
        e.bottom[static_cast<std::size_t>(pos)] = sn.front();
        --pos;
      }
      if (pos < 0) break;
    }
  }
}

std::vector<WreathElement> enumerate_wreath(const TopGroup& top, int n, long long bound) {
  std::vector<WreathElement> out;
  for_each_wreath(top, n, [&out](const WreathElement& e) { out.push_back(e); }, bound);
  return out;
}

std::string format_wreath(const WreathElement& a) {
  std::ostringstream os;
  os << "top=" << format_cycles(a.top);
  for (std::size_t i = 0; i < a.bottom.size(); ++i)
    os << "; f" << (i + 1) << "=" << format_cycles(a.bottom[i]);
  return os.str();
}

WreathElement parse_wreath(const std::string& text, int k, int n) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string::npos) next = text.size();
    std::string f = text.substr(pos, next - pos);
    std::size_t lo = f.find_first_not_of(" \t");
    std::size_t hi = f.find_last_not_of(" \t");
    fields.push_back(lo == std::string::npos ? "" : f.substr(lo, hi - lo + 1));
    pos = next + 1;
  }
  if (static_cast<int>(fields.size()) != k + 1)
    throw std::invalid_argument("wreath text needs a top and " + std::to_string(k) + " factors");

  auto expect_tag = [](const std::string& field, const std::string& tag) {
    if (field.rfind(tag, 0) != 0)
      throw std::invalid_argument("expected '" + tag + "...' in wreath text, got '" + field + "'");
    return field.substr(tag.size());
  };

  WreathElement e;
  e.top = parse_cycles(expect_tag(fields[0], "top="), k);
  for (int i = 1; i <= k; ++i)
    e.bottom.push_back(
        parse_cycles(expect_tag(fields[static_cast<std::size_t>(i)], "f" + std::to_string(i) + "="), n));
  return e;
}

}  // namespace origami
