#pragma once

#include "reflex/linalg.hpp"
#include "reflex/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/// Exact computations on lattice simplices containing the origin in their
/// interior.
namespace reflex::simplex {

using Point = std::vector<std::int64_t>;

/// Reduced fraction with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den);
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// d+1 lattice points in Z^d, stored as the rows of a (d+1) x d matrix, that
/// affinely span and contain the origin strictly inside.
class LatticeSimplex {
 public:
  /// Throws std::invalid_argument for the wrong shape, a degenerate simplex,
  /// or an origin that is not strictly interior.
  static LatticeSimplex from_vertices(IntMatrix vertices);

  std::size_t dim() const { return vertices_.cols(); }
  const IntMatrix& vertices() const { return vertices_; }
  Point vertex(std::size_t i) const;
  /// q_i = |det(v_j : j != i)| in vertex order.
  const std::vector<std::int64_t>& vertex_weights() const { return weights_; }

  std::string to_string() const { return vertices_.to_string(); }

 private:
  LatticeSimplex(IntMatrix vertices, std::vector<std::int64_t> weights)
      : vertices_(std::move(vertices)), weights_(std::move(weights)) {}

  IntMatrix vertices_;
  std::vector<std::int64_t> weights_;
};

/// Simplex with rational vertices; the dual of a lattice simplex.
struct RationalSimplex {
  std::size_t dim = 0;
  std::vector<std::vector<Fraction>> vertices;

  bool is_integral() const;
  /// Requires is_integral().
  LatticeSimplex to_lattice() const;
};

/// Sorted weight system of the maximal minors.
weights::WeightSystem weight_system_of(const LatticeSimplex& s);

/// The lattice simplex P_Q of a reduced weight system, built by completing
/// the weight row to a unimodular matrix. Its vertices generate Z^d.
LatticeSimplex build_PQ(const weights::WeightSystem& q);
/// conv(e_0, ..., e_{d-1}, -sum q_i e_i) for a weight system with a weight 1.
LatticeSimplex build_PQ_explicit(const weights::WeightSystem& q);

/// Vertex i of the dual solves <eta, v_j> = -1 for all j != i.
RationalSimplex dual(const LatticeSimplex& s);
bool is_reflexive(const LatticeSimplex& s);

/// S_Q = dual(P_Q) for a reflexive weight system.
LatticeSimplex build_SQ(const weights::WeightSystem& q);
/// conv(k_0 e_0 - u, ..., k_{d-1} e_{d-1} - u, -u) with u = e_0 + ... + e_{d-1},
/// for a reflexive weight system with a weight 1.
LatticeSimplex build_SQ_explicit(const weights::WeightSystem& q);

/// Normalized volume, from the weights and from the edge determinant; both
/// are computed and must agree.
std::int64_t volume(const LatticeSimplex& s);

struct LatticePointCount {
  std::int64_t count = 0;
  std::vector<Point> points;
};

inline constexpr std::int64_t kMaxCosets = 1'000'000'000;

/// Exact count of lattice points in the simplex, one test per coset of the
/// edge lattice, so the cost is the normalized volume. Points are collected
/// sorted on request.
LatticePointCount lattice_points(const LatticeSimplex& s, bool collect_points = false);

struct EdgeCount {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t points = 0;
};

struct EdgeReport {
  std::vector<EdgeCount> edges;

  std::int64_t max_points() const;
  std::vector<std::int64_t> sorted_counts() const;
};

EdgeReport edge_lattice_counts(const LatticeSimplex& s);

inline constexpr std::size_t kMaxCanonicalDimension = 6;

/// Lexicographically smallest column Hermite form over all vertex orders.
/// Two simplices are unimodularly equivalent iff their canonical forms agree.
IntMatrix canonical_form(const LatticeSimplex& s);

/// Index of the sublattice generated by the vertices: gcd of the maximal
/// minors, cross-checked against the Hermite basis of the row lattice.
std::int64_t factor_of(const LatticeSimplex& s);

/// Vertices mapped by v -> m v. m must be non-singular.
LatticeSimplex transform(const IntMatrix& m, const LatticeSimplex& s);

}  // namespace reflex::simplex
