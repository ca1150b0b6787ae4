#include "doctest.h"
#include "oracles.hpp"

#include "reflex/integer.hpp"
#include "reflex/linalg.hpp"

#include <random>

using namespace reflex;

TEST_CASE("integer parsing") {
  CHECK(parse_integer("123456789012345678901234567890") == Integer("123456789012345678901234567890"));
  CHECK(parse_integer("-7") == -7);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("1e5"), std::invalid_argument);
  CHECK(parse_integer_list("2,3, 6") == std::vector<Integer>{2, 3, 6});
  CHECK(parse_integer_list("(6 4 1 1)") == std::vector<Integer>{6, 4, 1, 1});
  CHECK_THROWS(parse_integer_list("2,x"));
  CHECK(to_decimal(Rational(3, 6)) == "1/2");
}

TEST_CASE("checked arithmetic") {
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked::add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(to_int64(Integer(1) << 70), std::overflow_error);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(7, 2) == 4);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 3}}) == 5);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    std::vector<std::vector<oracle::i128>> a(n, std::vector<oracle::i128>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j) = entry(rng);
    CHECK(determinant(m) == static_cast<std::int64_t>(oracle::det_int(a)));
  }
}

TEST_CASE("determinant identity for the (n_i - 1, -1) matrix") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> size(1, 6), value(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = size(rng);
    std::vector<std::int64_t> n(d);
    for (auto& x : n) x = value(rng);
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = i == j ? n[i] - 1 : -1;
    std::int64_t full = 1;
    for (auto x : n) full *= x;
    std::int64_t rhs = full;
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t p = 1;
      for (std::size_t i = 0; i < d; ++i)
        if (i != j) p *= n[i];
      rhs -= p;
    }
    CHECK(determinant(m) == rhs);
  }
}

TEST_CASE("column hermite form") {
  const IntMatrix h = column_hermite_form(IntMatrix{{2, 4}, {3, 1}});
  CHECK(h(0, 1) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  CHECK(h(1, 0) >= 0);
  CHECK(h(1, 0) < h(1, 1));
  CHECK(h(0, 0) * h(1, 1) == 10);

  // Invariant under right multiplication by unimodular matrices.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(4, 3);
    for (auto i = 0u; i < 4; ++i)
      for (auto j = 0u; j < 3; ++j) a(i, j) = entry(rng);
    IntMatrix u = IntMatrix::identity(3);
    for (int step = 0; step < 6; ++step) {
      IntMatrix e = IntMatrix::identity(3);
      const std::size_t r = step % 3, c = (step + 1 + trial) % 3;
      if (r != c) e(r, c) = entry(rng);
      u = u * e;
    }
    CHECK(column_hermite_form(a) == column_hermite_form(a * u));
  }
}

TEST_CASE("row lattice index") {
  CHECK(row_lattice_index(IntMatrix{{1, 0}, {0, 1}, {-1, -1}}) == 1);
  CHECK(row_lattice_index(IntMatrix{{2, -1}, {-1, 2}, {-1, -1}}) == 3);
  CHECK(row_lattice_index(IntMatrix{{1, 1}, {2, 2}}) == 0);
}

TEST_CASE("matrix helpers") {
  const IntMatrix a{{1, 2}, {3, 4}, {5, 6}};
  CHECK(a.transposed() == IntMatrix{{1, 3, 5}, {2, 4, 6}});
  CHECK(a.without_row(1) == IntMatrix{{1, 2}, {5, 6}});
  CHECK(a.to_string() == "[[1,2],[3,4],[5,6]]");
  CHECK(IntMatrix{{1, 2}} < IntMatrix{{1, 3}});
}
