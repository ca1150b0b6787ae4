#include "doctest.h"
#include "oracles.hpp"

#include "reflex/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace reflex;
using namespace reflex::simplex;
using weights::WeightSystem;

namespace {

WeightSystem ws(std::initializer_list<long long> xs) { return WeightSystem::from_weights({xs.begin(), xs.end()}); }

LatticeSimplex simplex_of(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return LatticeSimplex::from_vertices(IntMatrix(rows));
}

bool equivalent(const LatticeSimplex& a, const LatticeSimplex& b) { return canonical_form(a) == canonical_form(b); }

IntMatrix random_unimodular(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix u = IntMatrix::identity(d);
  for (int step = 0; step < 8; ++step) {
    IntMatrix e = IntMatrix::identity(d);
    const std::size_t r = rng() % d, c = rng() % d;
    if (r == c) {
      e(r, r) = -1;
    } else {
      e(r, c) = entry(rng);
    }
    u = u * e;
  }
  return u;
}

IntMatrix permuted_rows(const IntMatrix& m, const std::vector<std::size_t>& perm) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out(i, k) = m(perm[i], k);
  return out;
}

const LatticeSimplex kP2 = simplex_of({{1, 0}, {0, 1}, {-1, -1}});

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(simplex_of({{1, 0}, {0, 1}, {1, 1}}), std::invalid_argument);   // origin outside
  CHECK_THROWS_AS(simplex_of({{1, 0}, {0, 1}, {0, 0}}), std::invalid_argument);   // origin on the boundary
  CHECK_THROWS_AS(simplex_of({{1, 0}, {2, 0}, {-1, 0}}), std::invalid_argument);  // degenerate
  CHECK_THROWS_AS(LatticeSimplex::from_vertices(IntMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("weight system of a simplex") {
  CHECK(weight_system_of(kP2) == ws({1, 1, 1}));
  const auto big = simplex_of({{2, -1}, {-1, 2}, {-1, -1}});
  CHECK(weight_system_of(big) == ws({3, 3, 3}));
  CHECK(weight_system_of(big).factor() == 3);
  CHECK(weight_system_of(simplex_of({{1, 0}, {0, 1}, {-3, -2}})) == ws({3, 2, 1}));
  // sum q_i v_i = 0 in vertex order
  const auto s = simplex_of({{1, 0}, {0, 1}, {-3, -2}});
  for (std::size_t k = 0; k < 2; ++k) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc += s.vertex_weights()[i] * s.vertices()(i, k);
    CHECK(acc == 0);
  }
}

TEST_CASE("P_Q construction") {
  CHECK(equivalent(build_PQ(ws({1, 1, 1})), kP2));
  CHECK(equivalent(build_PQ(ws({2, 1, 1})), simplex_of({{1, 0}, {0, 1}, {-2, -1}})));
  CHECK_THROWS_AS(build_PQ(ws({2, 2, 2})), std::invalid_argument);
  // Defining property and agreement with the explicit form, on reduced
  // weight systems with and without a weight 1.
  const std::vector<WeightSystem> qs{ws({3, 2, 1}), ws({6, 4, 1, 1}), ws({5, 3, 2}), ws({7, 5, 3, 2}),
                                     ws({21, 14, 6, 1}), ws({42, 28, 12, 1, 1}), ws({9, 6, 4, 3, 1})};
  for (const auto& q : qs) {
    const auto p = build_PQ(q);
    CHECK(weight_system_of(p) == q);
    CHECK(factor_of(p) == 1);
    if (q.weights().back() == 1) CHECK(equivalent(p, build_PQ_explicit(q)));
  }
  CHECK_THROWS_AS(build_PQ_explicit(ws({5, 3, 2})), std::invalid_argument);
}

TEST_CASE("dual") {
  const auto d = dual(kP2);
  REQUIRE(d.is_integral());
  CHECK(equivalent(d.to_lattice(), simplex_of({{2, -1}, {-1, 2}, {-1, -1}})));
  const auto s = simplex_of({{1, 0}, {0, 1}, {-3, -2}});
  CHECK(equivalent(dual(s).to_lattice(), s));
  CHECK(equivalent(dual(simplex_of({{1, 0}, {0, 1}, {-2, -1}})).to_lattice(), simplex_of({{1, -1}, {-1, 3}, {-1, -1}})));
  // Pairing <eta_i, v_j> = -1 for j != i.
  const auto t = build_SQ(ws({6, 4, 1, 1}));
  const auto eta = dual(t);
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = 0; j <= 3; ++j) {
      if (i == j) continue;
      std::int64_t num = 0;
      std::int64_t den = 1;
      for (const auto& f : eta.vertices[i]) den = std::lcm(den, f.den);
      for (std::size_t k = 0; k < 3; ++k) num += eta.vertices[i][k].num * (den / eta.vertices[i][k].den) * t.vertices()(j, k);
      CHECK(num == -den);
    }
}

TEST_CASE("reflexivity") {
  CHECK(is_reflexive(kP2));
  CHECK(is_reflexive(simplex_of({{1, 0}, {0, 1}, {-1, -2}})));
  CHECK_FALSE(is_reflexive(simplex_of({{2, 0}, {0, 2}, {-2, -2}})));
  const auto half = dual(simplex_of({{2, 0}, {0, 2}, {-2, -2}}));
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS(half.to_lattice());
}

TEST_CASE("S_Q construction") {
  CHECK(equivalent(build_SQ(ws({2, 1, 1})), simplex_of({{1, -1}, {-1, 3}, {-1, -1}})));
  CHECK(equivalent(build_SQ(ws({3, 2, 1})), simplex_of({{1, 0}, {0, 1}, {-3, -2}})));
  // partition (2,3,12,12): conv(2e_0 - u, 3e_1 - u, 12e_2 - u, -u)
  const auto explicit_form = simplex_of({{1, -1, -1}, {-1, 2, -1}, {-1, -1, 11}, {-1, -1, -1}});
  CHECK(equivalent(build_SQ(ws({6, 4, 1, 1})), explicit_form));
  CHECK(equivalent(build_SQ_explicit(ws({6, 4, 1, 1})), explicit_form));
  CHECK_THROWS_AS(build_SQ(ws({2, 2, 1})), std::invalid_argument);
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& q : weights::reflexive_weight_systems(n)) {
      const auto s = build_SQ(q);
      CHECK(is_reflexive(s));
      CHECK(weights::reduce(weight_system_of(s)) == q);
      CHECK(Integer(factor_of(s)) == weights::m_of(q).as_integer());
      if (q.weights().back() == 1) CHECK(equivalent(s, build_SQ_explicit(q)));
    }
}

TEST_CASE("volume") {
  CHECK(volume(simplex_of({{2, -1}, {-1, 2}, {-1, -1}})) == 9);
  CHECK(volume(build_SQ(weights::enlarged_sylvester_ws(3))) == 72);
  CHECK(volume(build_SQ(weights::enlarged_sylvester_ws(4))) == 3528);
  CHECK(volume(kP2) == 3);
  CHECK(volume(simplex_of({{2, 0}, {0, 2}, {-2, -2}})) == 12);
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(simplex_of({{2, -1}, {-1, 2}, {-1, -1}})).count == 10);
  CHECK(lattice_points(build_SQ(weights::enlarged_sylvester_ws(3))).count == 39);
  CHECK(lattice_points(build_SQ(ws({3, 1, 1, 1}))).count == 39);
  const auto pts = lattice_points(kP2, true);
  CHECK(pts.count == 4);
  CHECK(pts.points == std::vector<Point>{{-1, -1}, {0, 0}, {0, 1}, {1, 0}});
  // Non-reflexive simplices are counted too.
  CHECK(lattice_points(simplex_of({{2, 0}, {0, 2}, {-2, -2}})).count == 10);
  CHECK(lattice_points(simplex_of({{3, 1}, {-1, 2}, {-2, -5}})).count ==
        *oracle::lattice_points_box(IntMatrix{{3, 1}, {-1, 2}, {-2, -5}}, 1000000));
}

TEST_CASE("lattice points agree with the box-scan oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6);
  int tested = 0;
  while (tested < 150) {
    const std::size_t d = 2 + tested % 3;
    IntMatrix v(d + 1, d);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t k = 0; k < d; ++k) v(i, k) = entry(rng);
    LatticeSimplex s = kP2;
    try {
      s = LatticeSimplex::from_vertices(v);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto box = oracle::lattice_points_box(v, 200000);
    if (!box) continue;
    const auto got = lattice_points(s, true);
    CHECK(got.count == *box);
    CHECK(got.points.size() == static_cast<std::size_t>(got.count));
    CHECK(std::adjacent_find(got.points.begin(), got.points.end()) == got.points.end());
    ++tested;
  }
}

TEST_CASE("edge counts") {
  const auto e = edge_lattice_counts(simplex_of({{1, -1}, {-1, 3}, {-1, -1}}));
  CHECK(e.max_points() == 5);
  CHECK(e.sorted_counts() == std::vector<std::int64_t>{3, 3, 5});
  // partition (2,3,6): pair gcds 1, 2, 3
  CHECK(edge_lattice_counts(simplex_of({{1, 0}, {0, 1}, {-3, -2}})).sorted_counts() == std::vector<std::int64_t>{2, 3, 4});
  CHECK(edge_lattice_counts(kP2).sorted_counts() == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("canonical form invariance") {
  std::mt19937_64 rng(99);
  const std::vector<LatticeSimplex> samples{kP2, build_SQ(ws({6, 4, 1, 1})), build_SQ(ws({3, 1, 1, 1})),
                                            build_PQ(ws({7, 5, 3, 2})), build_SQ(ws({2, 1, 1, 1, 1}))};
  for (const auto& s : samples) {
    const IntMatrix c = canonical_form(s);
    CHECK(weight_system_of(LatticeSimplex::from_vertices(c)) == weight_system_of(s));
    std::vector<std::size_t> perm(s.dim() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto moved = transform(random_unimodular(s.dim(), rng), s);
      const auto shuffled = LatticeSimplex::from_vertices(permuted_rows(moved.vertices(), perm));
      CHECK(canonical_form(shuffled) == c);
    }
  }
  // Non-equivalent simplices with the same weights are told apart.
  CHECK(canonical_form(kP2) != canonical_form(simplex_of({{2, -1}, {-1, 2}, {-1, -1}})));
}

TEST_CASE("factor") {
  CHECK(factor_of(simplex_of({{2, -1}, {-1, 2}, {-1, -1}})) == 3);
  CHECK(factor_of(kP2) == 1);
  for (std::size_t d = 2; d <= 5; ++d) CHECK(factor_of(build_SQ(weights::sylvester_ws(d))) == 1);
  CHECK(factor_of(build_SQ(weights::enlarged_sylvester_ws(4))) == 42);
}
