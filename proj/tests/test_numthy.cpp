#include "doctest.h"
#include "oracles.hpp"

#include "reflex/numthy.hpp"

#include <set>

using namespace reflex;
using namespace reflex::numthy;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

UnitPartition up(std::initializer_list<long long> xs) { return UnitPartition::from_denominators(ints(xs)); }

}  // namespace

TEST_CASE("sylvester values") {
  const long long ys[] = {2, 3, 7, 43, 1807, 3263443};
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(sylvester(n) == ys[n]);
    CHECK(sylvester_t(n) == ys[n] - 1);
  }
  CHECK(to_decimal(sylvester(6)) == "10650056950807");
  // y_n = 1 + y_0 ... y_{n-1}, re-derived here.
  Integer prod = 1;
  for (std::size_t n = 0; n < 12; ++n) {
    CHECK(sylvester(n) == prod + 1);
    prod *= sylvester(n);
  }
}

TEST_CASE("sylvester and enlarged partitions") {
  CHECK(sylvester_partition(2) == up({2, 3, 6}));
  CHECK(sylvester_partition(3) == up({2, 3, 7, 42}));
  CHECK(sylvester_partition(2).total_weight() == 6);
  CHECK(enlarged_sylvester_partition(2) == up({2, 4, 4}));
  CHECK(enlarged_sylvester_partition(3) == up({2, 3, 12, 12}));
  CHECK(enlarged_sylvester_partition(4) == up({2, 3, 7, 84, 84}));
  CHECK_THROWS_AS(sylvester_partition(1), std::invalid_argument);
  CHECK_THROWS_AS(enlarged_sylvester_partition(0), std::invalid_argument);
  for (std::size_t d = 2; d <= 8; ++d) CHECK(sylvester_partition(d).total_weight() == sylvester_t(d));
}

TEST_CASE("unit partition validation") {
  CHECK(up({6, 2, 3}).denominators() == ints({2, 3, 6}));
  CHECK_THROWS_AS(up({2, 3, 7}), std::invalid_argument);
  CHECK_THROWS_AS(up({2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(UnitPartition::from_denominators({}), std::invalid_argument);
  CHECK(up({1}).length() == 1);
}

TEST_CASE("enumeration small lengths") {
  CHECK(unit_partitions(1) == std::vector{up({1})});
  CHECK(unit_partitions(2) == std::vector{up({2, 2})});
  CHECK(unit_partitions(3) == std::vector{up({2, 3, 6}), up({2, 4, 4}), up({3, 3, 3})});
}

TEST_CASE("enumeration matches brute-force oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto bound = to_int64(n == 1 ? Integer(1) : sylvester_t(n - 1));
    const auto expected = oracle::unit_partitions(n, bound);
    const auto got = unit_partitions(n);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      std::vector<Integer> e(expected[i].begin(), expected[i].end());
      CHECK(got[i].denominators() == e);
    }
  }
  CHECK(count_unit_partitions(4) == 14);
  CHECK(count_unit_partitions(5) == 147);
}

TEST_CASE("enumeration counts for lengths 6 and 7") {
  CHECK(count_unit_partitions(6) == 3462);
  CHECK(count_unit_partitions(7) == 294314);
}

TEST_CASE("enumeration is sorted, exact and lexicographic") {
  const auto ps = unit_partitions(6);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& ks = ps[i].denominators();
    CHECK(std::is_sorted(ks.begin(), ks.end()));
    Rational s = 0;
    for (const auto& k : ks) s += Rational(1) / Rational(k);
    CHECK(s == 1);
    if (i) CHECK(ps[i - 1] < ps[i]);
  }
}

TEST_CASE("denominator cap and length guard") {
  EnumerationOptions capped;
  capped.max_denominator = Integer(12);
  const auto ps = unit_partitions(4, capped);
  std::size_t expected = 0;
  for (const auto& p : oracle::unit_partitions(4, 42))
    if (p.back() <= 12) ++expected;
  CHECK(ps.size() == expected);
  for (const auto& p : ps) CHECK(p.denominators().back() <= 12);

  CHECK_THROWS_AS(unit_partitions(8), std::invalid_argument);
  EnumerationOptions small;
  small.max_length = 3;
  CHECK_THROWS_AS(unit_partitions(4, small), std::invalid_argument);
  CHECK_THROWS_AS(unit_partitions(0), std::invalid_argument);
}

TEST_CASE("kprop reports") {
  const auto a = check_kprop(up({2, 3, 6}));
  CHECK(a.holds());
  CHECK(a.product == 36);
  CHECK(a.product_upper_equal);
  CHECK(a.is_sylvester);

  const auto b = check_kprop(up({3, 3, 3}));
  CHECK(b.holds());
  CHECK(b.product == 27);
  CHECK(b.amgm_equal);
  CHECK(b.is_all_equal);

  const auto c = check_kprop(up({2, 6, 6, 6}));
  CHECK(c.holds());
  CHECK(c.head_applicable);
  CHECK(c.head_product == 72);
  CHECK(c.head_upper_equal);
  CHECK(c.is_two_six_six_six);

  const auto e = check_kprop(up({2, 3, 12, 12}));
  CHECK(e.head_upper_equal);
  CHECK(e.is_enlarged_sylvester);
  CHECK_FALSE(check_kprop(up({2, 4, 4})).head_applicable);
}

TEST_CASE("kprop sweeps") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto verdicts = kprop_sweep(n);
    CHECK(verdicts.size() == (n >= 4 ? 4u : 3u));
    for (const auto& v : verdicts) {
      CHECK_MESSAGE(v.holds, v.statement);
      CHECK(v.checked == count_unit_partitions(n));
      if (v.statement == "lcm-square-bound") CHECK(v.extremals.empty());
      if (v.statement == "product-upper-bound") CHECK(v.extremals == std::vector{sylvester_partition(n - 1)});
      if (v.statement == "amgm-lower-bound") {
        std::vector<Integer> ks(n, Integer(n));
        CHECK(v.extremals == std::vector{UnitPartition::from_denominators(ks)});
      }
      if (v.statement == "head-product-bound") {
        std::vector<UnitPartition> expected{enlarged_sylvester_partition(n - 1)};
        if (n == 4) expected.push_back(up({2, 6, 6, 6}));
        CHECK(v.extremals == expected);
      }
    }
  }
}

TEST_CASE("curtiss corollary sweeps") {
  const auto v2 = curtiss_corollary_sweep(2);
  for (const auto& v : v2) CHECK(v.holds);
  CHECK(v2.front().extremals == std::vector{up({2, 2})});
  CHECK(curtiss_corollary_sweep(3).front().extremals == std::vector{up({2, 3, 6})});
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const auto& v : curtiss_corollary_sweep(n)) {
      CHECK_MESSAGE(v.holds, v.statement);
      CHECK(v.extremals == std::vector{sylvester_partition(n - 1)});
    }
  }
  CHECK(curtiss_corollary_sweep(4).front().extremals == std::vector{up({2, 3, 7, 42})});
}

TEST_CASE("cruc inequality") {
  const auto c42 = cruc_inequality_case(4, 2);
  CHECK(c42.holds);
  CHECK(c42.equal);
  // 3^2 t_1^3 = 72 = 2 t_2^2
  CHECK(Integer(9) * boost::multiprecision::pow(sylvester_t(1), 3) == 2 * sylvester_t(2) * sylvester_t(2));
  CHECK(cruc_inequality_case(4, 1).equal);
  const auto c52 = cruc_inequality_case(5, 2);
  CHECK(c52.holds);
  CHECK_FALSE(c52.equal);
  CHECK(Integer(9) * boost::multiprecision::pow(sylvester_t(2), 3) == 1944);
  CHECK(2 * sylvester_t(3) * sylvester_t(3) == 3528);

  const auto all = cruc_inequality_check(12);
  CHECK(all.holds);
  std::size_t cases = 0;
  for (const auto& c : all.cases) {
    ++cases;
    CHECK(c.holds);
    CHECK(c.equal == (c.r == 1 || (c.n == 4 && c.r == 2)));
  }
  CHECK(cases == 63);  // sum of n - 1 for n = 4..12
}

TEST_CASE("vardi floor formula") {
  const auto v = vardi_floor_check(5);
  CHECK(v.overall == FloorVerdict::confirmed);
  REQUIRE(v.cases.size() == 6);
  CHECK(*v.cases[0].floor_value == 2);
  CHECK(*v.cases[4].floor_value == 1807);
  CHECK(*v.cases[5].floor_value == 3263443);

  // Ten digits settle n = 0 and run out of precision later.
  const auto short_c = vardi_floor_check(6, "1.2640847353");
  CHECK(short_c.cases[0].verdict == FloorVerdict::confirmed);
  CHECK(short_c.overall == FloorVerdict::inconclusive);
  for (const auto& c : short_c.cases) CHECK(c.verdict != FloorVerdict::refuted);

  // A wrong constant is refuted, not confirmed.
  CHECK(vardi_floor_check(3, "1.300000000000").overall == FloorVerdict::refuted);
  CHECK_THROWS_AS(vardi_floor_check(7), std::invalid_argument);
  CHECK_THROWS_AS(vardi_floor_check(2, "abc"), std::invalid_argument);
}
