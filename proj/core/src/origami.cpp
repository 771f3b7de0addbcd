#include "origami/origami.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace origami {

namespace {

// First square unreachable from square 1 under both gluings, or 0 if none.
int unreachable_square(const Origami& o) {
  const Permutation inv_a = inverse(o.sigma_a);
  const Permutation inv_b = inverse(o.sigma_b);
  std::vector<char> seen(static_cast<std::size_t>(o.n), 0);
  std::vector<int> stack = {1};
  seen[0] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const Permutation* p : {&o.sigma_a, &o.sigma_b, &inv_a, &inv_b}) {
      const int y = p->apply(x);
      if (!seen[static_cast<std::size_t>(y - 1)]) {
        seen[static_cast<std::size_t>(y - 1)] = 1;
        stack.push_back(y);
      }
    }
  }
  for (int x = 1; x <= o.n; ++x) {
    if (!seen[static_cast<std::size_t>(x - 1)]) return x;
  }
  return 0;
}

}  // namespace

Origami make_origami(int n, Permutation sigma_a, Permutation sigma_b,
                     bool allow_disconnected) {
  if (n <= 0) throw std::invalid_argument("origami needs at least one square");
  if (sigma_a.degree() != n || sigma_b.degree() != n) {
    throw std::invalid_argument("origami permutation degree mismatch: n=" +
                                std::to_string(n) + ", sigma_a on " +
                                std::to_string(sigma_a.degree()) + ", sigma_b on " +
                                std::to_string(sigma_b.degree()));
  }
  Origami o{n, std::move(sigma_a), std::move(sigma_b)};
  if (!allow_disconnected) {
    const int missing = unreachable_square(o);
    if (missing != 0) {
      throw disconnected_error("disconnected origami: square " +
                               std::to_string(missing) +
                               " is unreachable from square 1");
    }
  }
  return o;
}

bool is_connected(const Origami& o) { return unreachable_square(o) == 0; }

WreathElement sigma_of(const Origami& o) {
  Permutation top = parse_cycles("(1 3)(2 4)", 4);
  std::vector<Permutation> bottom = {o.sigma_a, o.sigma_b, inverse(o.sigma_a),
                                     inverse(o.sigma_b)};
  return WreathElement{std::move(top), std::move(bottom)};
}

WreathElement tau_of(int n) {
  return WreathElement{parse_cycles("(1 2 3 4)", 4),
                       std::vector<Permutation>(4, Permutation::identity(n))};
}

WreathElement sigma_tau(const Origami& o) {
  return w_multiply(sigma_of(o), tau_of(o.n));
}

std::vector<std::vector<std::pair<int, int>>> vertex_orbits(const Origami& o) {
  const WreathElement st = sigma_tau(o);
  std::vector<std::vector<char>> seen(
      4, std::vector<char>(static_cast<std::size_t>(o.n), 0));
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (int j = 1; j <= o.n; ++j) {
    if (seen[0][static_cast<std::size_t>(j - 1)]) continue;
    std::vector<std::pair<int, int>> orbit;
    std::pair<int, int> v{1, j};
    do {
      seen[static_cast<std::size_t>(v.first - 1)]
          [static_cast<std::size_t>(v.second - 1)] = 1;
      orbit.push_back(v);
      v = w_act(st, v.first, v.second);
    } while (v != std::pair<int, int>{1, j});
    orbits.push_back(std::move(orbit));
  }
  // Every pair lies in the orbit of some (1, j): the top of sigma_tau is a
  // 4-cycle, so each orbit meets slot 1.
  return orbits;
}

int vertex_count_commutator(const Origami& o) {
  return cycle_count(commutator(o.sigma_a, o.sigma_b));
}

SurfaceInvariants surface_invariants(const Origami& o, const GenusOptions& opts) {
  if (!is_connected(o)) {
    throw disconnected_error(
        "surface invariants need a connected origami; square " +
        std::to_string(unreachable_square(o)) + " is unreachable from square 1");
  }
  const int vertices = vertex_count_commutator(o);
  if (o.n <= 1000 || opts.force_orbit_check) {
    const auto orbits = vertex_orbits(o);
    if (static_cast<int>(orbits.size()) != vertices) {
      throw std::logic_error(
          "vertex count mismatch: commutator gives " + std::to_string(vertices) +
          " cycles but the orbit traversal found " +
          std::to_string(orbits.size()) + " orbits");
    }
  }
  SurfaceInvariants inv;
  inv.vertices = vertices;
  inv.edges = 2 * Integer(o.n);
  inv.faces = o.n;
  inv.euler = inv.vertices - inv.edges + inv.faces;
  // euler = 2 - 2g; the commutator is even, so euler is even as well.
  inv.genus = (2 - inv.euler) / 2;
  return inv;
}

Integer genus(const Origami& o, const GenusOptions& opts) {
  return surface_invariants(o, opts).genus;
}

bool are_equivalent(const Origami& a, const Origami& b) {
  if (a.n != b.n) return false;
  if (a.n > 8) {
    throw std::invalid_argument(
        "equivalence search is exhaustive and limited to 8 squares; got " +
        std::to_string(a.n));
  }
  std::vector<int> img(static_cast<std::size_t>(a.n));
  std::iota(img.begin(), img.end(), 1);
  do {
    const Permutation c = Permutation::from_images(img);
    const Permutation ci = inverse(c);
    if (compose(compose(c, a.sigma_a), ci) == b.sigma_a &&
        compose(compose(c, a.sigma_b), ci) == b.sigma_b) {
      return true;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

std::string format_origami_text(const Origami& o) {
  std::ostringstream out;
  out << "n = " << o.n << '\n';
  out << "sigma_a = " << format_cycles(o.sigma_a) << '\n';
  out << "sigma_b = " << format_cycles(o.sigma_b) << '\n';
  return out.str();
}

namespace {

// Reads "key = value" and returns the value with surrounding blanks removed.
std::string field_value(const std::string& line, const std::string& key) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("origami text line lacks '=': " + line);
  }
  std::string name = line.substr(0, eq);
  std::string value = line.substr(eq + 1);
  const auto strip = [](std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  strip(name);
  strip(value);
  if (name != key) {
    throw std::invalid_argument("expected origami field '" + key + "', got '" +
                                name + "'");
  }
  if (value.empty()) {
    throw std::invalid_argument("origami field '" + key + "' has no value");
  }
  return value;
}

}  // namespace

Origami parse_origami_text(const std::string& text, bool allow_disconnected) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.size() != 3) {
    throw std::invalid_argument(
        "origami text needs the three lines n, sigma_a, sigma_b; got " +
        std::to_string(lines.size()) + " nonempty lines");
  }
  const std::string n_text = field_value(lines[0], "n");
  if (n_text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("origami field 'n' is not an integer: " + n_text);
  }
  const int n = std::stoi(n_text);
  if (n <= 0) throw std::invalid_argument("origami needs at least one square");
  Permutation a = parse_cycles(field_value(lines[1], "sigma_a"), n);
  Permutation b = parse_cycles(field_value(lines[2], "sigma_b"), n);
  return make_origami(n, std::move(a), std::move(b), allow_disconnected);
}

std::string format_origami_json(const Origami& o) {
  nlohmann::json j;
  j["n"] = o.n;
  j["sigma_a"] = o.sigma_a.images();
  j["sigma_b"] = o.sigma_b.images();
  return j.dump();
}

Origami parse_origami_json(const std::string& text, bool allow_disconnected) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("origami JSON is malformed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("sigma_a") ||
      !j.contains("sigma_b")) {
    throw std::invalid_argument(
        "origami JSON needs the keys n, sigma_a, sigma_b");
  }
  const int n = j.at("n").get<int>();
  const auto ia = j.at("sigma_a").get<std::vector<int>>();
  const auto ib = j.at("sigma_b").get<std::vector<int>>();
  return make_origami(n, Permutation::from_images(ia),
                      Permutation::from_images(ib), allow_disconnected);
}

}  // namespace origami
