#include "doctest.h"
#include "oracles.hpp"

#include "reflex/classify.hpp"

#include <numeric>

using namespace reflex;
using classify::ClassRecord;

namespace {

const std::vector<ClassRecord>& records(std::size_t d) {
  static const std::vector<ClassRecord> r2 = classify::classify_dimension(2);
  static const std::vector<ClassRecord> r3 = classify::classify_dimension(3);
  static const std::vector<ClassRecord> r4 = classify::classify_dimension(4);
  return d == 2 ? r2 : d == 3 ? r3 : r4;
}

std::vector<Integer> unreduced_weights(const simplex::LatticeSimplex& s) {
  std::vector<Integer> q;
  for (auto w : s.vertex_weights()) q.push_back(w);
  std::sort(q.rbegin(), q.rend());
  return q;
}

}  // namespace

TEST_CASE("duality is an involution") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) {
      const auto s = r.simplex();
      const auto back = simplex::dual(simplex::dual(s).to_lattice());
      REQUIRE(back.is_integral());
      CHECK(back.to_lattice().vertices() == s.vertices());
    }
}

TEST_CASE("dual weight system is m_Q times the weight system") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) {
      const auto s = r.simplex();
      const auto q = unreduced_weights(s);
      const auto m = weights::m_of(weights::WeightSystem::from_weights(q)).value;
      const auto q_dual = unreduced_weights(simplex::dual(s).to_lattice());
      for (std::size_t i = 0; i < q.size(); ++i) CHECK(Rational(q_dual[i]) == m * Rational(q[i]));
    }
}

TEST_CASE("factor chain lambda lambda* = m") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) {
      const auto lambda_dual = simplex::factor_of(simplex::dual(r.simplex()).to_lattice());
      CHECK(Integer(r.lambda) * lambda_dual == r.m);
      CHECK(weights::m_of(r.reduced_weights).as_integer() == r.m);
    }
}

TEST_CASE("Blichfeldt bound") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) CHECK(r.lattice_points <= static_cast<std::int64_t>(d) + r.volume);
}

TEST_CASE("three-dimensional point formula") {
  for (const auto& r : records(3)) {
    CHECK(r.volume % 2 == 0);
    CHECK(r.lattice_points == r.volume / 2 + 3);
  }
}

TEST_CASE("stored point counts agree with the box-scan oracle") {
  std::size_t compared = 0;
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) {
      const auto box = oracle::lattice_points_box(r.canonical_vertices, d == 4 ? 20000 : 1000000);
      if (!box) continue;
      CHECK(*box == r.lattice_points);
      ++compared;
    }
  CHECK(compared >= 53);
}

TEST_CASE("edge counts of S_Q follow gcd(k_i, k_j) + 1") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& q : weights::reflexive_weight_systems(n)) {
      const auto k = weights::weights_to_partition(q).denominators();
      std::vector<std::int64_t> expected;
      for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) expected.push_back(std::gcd(to_int64(k[i]), to_int64(k[j])) + 1);
      std::sort(expected.begin(), expected.end());
      CHECK_MESSAGE(simplex::edge_lattice_counts(simplex::build_SQ(q)).sorted_counts() == expected, q.to_string());
    }
}

TEST_CASE("volume routes agree") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& r : records(d)) CHECK_NOTHROW(simplex::volume(r.simplex()));
}
