#pragma once

#include "origami/numeric.hpp"
#include "origami/perm.hpp"
#include "origami/wreath.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace origami {

// Raised when gluing data fails to act transitively; callers that treat
// disconnected input as a domain error rather than a usage error can catch
// this instead of the base class.
struct disconnected_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Square-tiled surface built from n unit squares: sigma_a glues each square
// to its right neighbour, sigma_b to its upper neighbour. The surface is
// connected exactly when the two gluings act transitively.
struct Origami {
  int n = 0;
  Permutation sigma_a;
  Permutation sigma_b;

  bool operator==(const Origami&) const = default;
};

// Validates degrees and, unless allow_disconnected, transitivity. The error
// for a disconnected pair names a square unreachable from square 1.
Origami make_origami(int n, Permutation sigma_a, Permutation sigma_b,
                     bool allow_disconnected = false);
bool is_connected(const Origami& o);

// The wreath encoding of the gluing data on the four edge slots of each
// square (1 left, 2 bottom, 3 right, 4 top): sigma carries the two gluings
// and their inverses, tau rotates the slots. Their product sigma_tau has the
// single top cycle (1 4 3 2) whose cycle product is the commutator of the
// gluing pair.
WreathElement sigma_of(const Origami& o);
WreathElement tau_of(int n);
WreathElement sigma_tau(const Origami& o);

// Orbits of the cyclic group generated by sigma_tau on the pairs
// (slot, square); each orbit is one vertex of the surface. Orbits are seeded
// at slot 1 in increasing square order and listed in traversal order.
std::vector<std::vector<std::pair<int, int>>> vertex_orbits(const Origami& o);

// Number of cycles of sigma_a sigma_b sigma_a^-1 sigma_b^-1, fixed points
// included; equals the vertex count of the surface.
int vertex_count_commutator(const Origami& o);

struct SurfaceInvariants {
  Integer vertices;
  Integer edges;
  Integer faces;
  Integer euler;
  Integer genus;
};

struct GenusOptions {
  // Run the orbit traversal cross-check above the automatic size cutoff.
  bool force_orbit_check = false;
};

// Face count n, edge count 2n, vertex count from the commutator cycles;
// genus from the Euler characteristic. The commutator count is cross-checked
// against the orbit traversal for n <= 1000 (always) or on request beyond.
SurfaceInvariants surface_invariants(const Origami& o, const GenusOptions& opts = {});
Integer genus(const Origami& o, const GenusOptions& opts = {});

// Simultaneous conjugacy of the gluing pairs by exhaustive search; n <= 8.
bool are_equivalent(const Origami& a, const Origami& b);

// Three-line text form
//   n = 5
//   sigma_a = (1 2 3)
//   sigma_b = (1 4 5)(2 3)
// and a JSON object {"n": 5, "sigma_a": [...], "sigma_b": [...]} with
// 1-based image arrays. Parsing validates like make_origami.
std::string format_origami_text(const Origami& o);
Origami parse_origami_text(const std::string& text, bool allow_disconnected = false);
std::string format_origami_json(const Origami& o);
Origami parse_origami_json(const std::string& text, bool allow_disconnected = false);

}  // namespace origami
