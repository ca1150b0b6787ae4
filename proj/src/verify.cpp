#include "reflex/verify.hpp"

#include <algorithm>
#include <set>

namespace reflex::verify {

using classify::ClassRecord;

namespace {

IntMatrix canonical_SQ(const weights::WeightSystem& q) { return simplex::canonical_form(simplex::build_SQ(q)); }

weights::WeightSystem ws(std::vector<Integer> qs) { return weights::WeightSystem::from_weights(std::move(qs)); }

std::vector<IntMatrix> sorted(std::vector<IntMatrix> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Fills observed / extremal_classes from a per-record score; returns the max.
template <typename Score>
Integer take_max(TheoremVerdict& v, const std::vector<ClassRecord>& records, Score score) {
  Integer best = 0;
  bool first = true;
  for (const auto& r : records) {
    const Integer s = score(r);
    if (first || s > best) {
      best = s;
      first = false;
      v.extremal_classes.clear();
    }
    if (s == best) v.extremal_classes.push_back(r.canonical_vertices);
  }
  v.extremal_classes = sorted(std::move(v.extremal_classes));
  v.observed = best;
  return best;
}

void expect(TheoremVerdict& v, bool ok, const std::string& why) {
  if (!ok) v.failures.push_back(why);
}

std::int64_t dual_volume(const ClassRecord& r) {
  return simplex::volume(simplex::dual(r.simplex()).to_lattice());
}

}  // namespace

void require_complete(std::size_t d, const std::vector<ClassRecord>& records) {
  if (d < 2) throw IncompleteClassification("dimension must be >= 2");
  for (const auto& r : records)
    if (r.d != d) throw IncompleteClassification("record of dimension " + std::to_string(r.d) + " in a d=" + std::to_string(d) + " classification");
  std::set<weights::WeightSystem> with_dual;
  std::set<weights::WeightSystem> present;
  for (const auto& r : records) {
    present.insert(r.reduced_weights);
    if (Integer(r.lambda) == r.m) with_dual.insert(r.reduced_weights);
  }
  std::set<IntMatrix> forms;
  for (const auto& r : records) forms.insert(r.canonical_vertices);
  for (const auto& r : records) {
    const IntMatrix dual_form = simplex::canonical_form(simplex::dual(r.simplex()).to_lattice());
    if (!forms.count(dual_form)) throw IncompleteClassification("the dual of " + r.canonical_vertices.to_string() + " is missing");
  }
  for (const auto& q : weights::reflexive_weight_systems(d + 1)) {
    if (!present.count(q)) throw IncompleteClassification("weight system " + q.to_string() + " has no classes");
    if (!with_dual.count(q)) throw IncompleteClassification("weight system " + q.to_string() + " lacks its S_Q class");
  }
}

TheoremVerdict verify_theorem_A(std::size_t d, const std::vector<ClassRecord>& records) {
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "A";
  v.d = d;
  std::vector<IntMatrix> expected;
  if (d == 2) {
    v.claimed_bound = 9;
    expected.push_back(canonical_SQ(ws({1, 1, 1})));
  } else {
    const Integer t = numthy::sylvester_t(d - 1);
    v.claimed_bound = 2 * t * t;
    expected.push_back(canonical_SQ(weights::enlarged_sylvester_ws(d)));
    if (d == 3) expected.push_back(canonical_SQ(ws({3, 1, 1, 1})));
  }
  take_max(v, records, [](const ClassRecord& r) { return Integer(r.volume); });
  v.holds = v.observed == v.claimed_bound;
  v.unique = v.extremal_classes == sorted(expected);
  expect(v, v.holds, "largest volume " + to_decimal(v.observed) + " != " + to_decimal(v.claimed_bound));
  expect(v, v.unique, "extremal classes differ from the expected S_Q");
  return v;
}

TheoremVerdict verify_theorem_A_points(std::size_t d, const std::vector<ClassRecord>& records) {
  if (d != 2 && d != 3) throw std::invalid_argument("lattice-point maximum is stated for d = 2, 3 only");
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "A-points";
  v.d = d;
  std::vector<IntMatrix> expected;
  if (d == 2) {
    v.claimed_bound = 10;
    expected.push_back(canonical_SQ(ws({1, 1, 1})));
  } else {
    v.claimed_bound = 39;
    expected.push_back(canonical_SQ(weights::enlarged_sylvester_ws(3)));
    expected.push_back(canonical_SQ(ws({3, 1, 1, 1})));
  }
  take_max(v, records, [](const ClassRecord& r) { return Integer(r.lattice_points); });
  v.holds = v.observed == v.claimed_bound;
  v.unique = v.extremal_classes == sorted(expected);
  expect(v, v.holds, "largest point count " + to_decimal(v.observed) + " != " + to_decimal(v.claimed_bound));
  expect(v, v.unique, "extremal classes differ from the expected S_Q");
  return v;
}

TheoremVerdict verify_theorem_B(std::size_t d, const std::vector<ClassRecord>& records) {
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "B";
  v.d = d;
  v.claimed_bound = 2 * numthy::sylvester_t(d - 1) + 1;
  take_max(v, records, [](const ClassRecord& r) {
    const auto report = simplex::edge_lattice_counts(r.simplex());
    if (report.max_points() != r.max_edge_points) throw std::logic_error("stored maxEdge is stale");
    return Integer(r.max_edge_points);
  });
  v.holds = v.observed == v.claimed_bound;
  v.unique = v.extremal_classes == std::vector<IntMatrix>{canonical_SQ(weights::enlarged_sylvester_ws(d))};
  expect(v, v.holds, "largest edge count " + to_decimal(v.observed) + " != " + to_decimal(v.claimed_bound));
  expect(v, v.unique, "edge maximum not attained exactly by S_{Q'_d}");
  return v;
}

TheoremVerdict verify_theorem_C(std::size_t d, const std::vector<ClassRecord>& records) {
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "C";
  v.d = d;
  const Integer t = numthy::sylvester_t(d);
  v.claimed_bound = t * t;
  const Integer lower = boost::multiprecision::pow(Integer(d + 1), static_cast<unsigned>(d + 1));
  const IntMatrix sylvester_form = canonical_SQ(weights::sylvester_ws(d));

  bool holds = true;
  std::vector<IntMatrix> upper_equal;
  for (const auto& r : records) {
    const std::string who = r.canonical_vertices.to_string();
    const Integer product = Integer(r.volume) * dual_volume(r);
    if (product != r.partition.product()) {
      holds = false;
      v.failures.push_back(who + ": Vol(P) Vol(P*) != product of the unit partition");
    }
    if (product < lower || product > v.claimed_bound) {
      holds = false;
      v.failures.push_back(who + ": product " + to_decimal(product) + " outside the bracket");
    }
    bool vertex_sum_zero = true;
    for (std::size_t k = 0; k < d; ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i <= d; ++i) s += r.canonical_vertices(i, k);
      if (s != 0) vertex_sum_zero = false;
    }
    const bool all_ones = std::all_of(r.reduced_weights.weights().begin(), r.reduced_weights.weights().end(),
                                      [](const Integer& q) { return q == 1; });
    if (vertex_sum_zero != all_ones) {
      holds = false;
      v.failures.push_back(who + ": vertex sum zero disagrees with all-equal weights");
    }
    if ((product == lower) != vertex_sum_zero) {
      holds = false;
      v.failures.push_back(who + ": lower equality does not match a zero vertex sum");
    }
    if (product == v.claimed_bound) {
      upper_equal.push_back(r.canonical_vertices);
      if (!r.self_dual) {
        holds = false;
        v.failures.push_back(who + ": upper extremal is not self-dual");
      }
    }
  }
  take_max(v, records, [&](const ClassRecord& r) { return Integer(r.volume) * dual_volume(r); });
  v.holds = holds && v.observed <= v.claimed_bound;
  v.unique = sorted(upper_equal) == std::vector<IntMatrix>{sylvester_form};
  expect(v, v.unique, "upper equality not attained exactly by S_{Q_d}");
  return v;
}

TheoremVerdict verify_theorem_C_dual_volume(std::size_t d, const std::vector<ClassRecord>& records) {
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "C-dual";
  v.d = d;
  v.claimed_bound = numthy::sylvester_t(d);
  const IntMatrix sylvester_form = canonical_SQ(weights::sylvester_ws(d));
  std::vector<ClassRecord> generating;
  for (const auto& r : records)
    if (simplex::factor_of(simplex::dual(r.simplex()).to_lattice()) == 1) generating.push_back(r);
  take_max(v, generating, [](const ClassRecord& r) { return Integer(dual_volume(r)); });
  v.holds = v.observed <= v.claimed_bound;
  v.unique = v.observed == v.claimed_bound && v.extremal_classes == std::vector<IntMatrix>{sylvester_form};
  expect(v, v.holds, "dual volume " + to_decimal(v.observed) + " exceeds t_d");
  expect(v, v.unique, "dual-volume maximum not attained exactly by S_{Q_d}");
  return v;
}

TheoremVerdict verify_corollary_bracket(std::size_t d, const std::vector<ClassRecord>& records) {
  if (d < 3) throw std::invalid_argument("point-count bracket is stated for d >= 3");
  require_complete(d, records);
  TheoremVerdict v;
  v.theorem = "J-bracket";
  v.d = d;
  const Integer t = numthy::sylvester_t(d - 1);
  v.claimed_bound = d + 2 * t * t;
  const Integer j = take_max(v, records, [](const ClassRecord& r) { return Integer(r.lattice_points); });
  Integer factorial = 1;
  for (std::size_t i = 2; i <= d - 2; ++i) factorial *= i;
  const bool lower_ok = 3 * factorial * j > t * t;
  const bool upper_ok = j <= v.claimed_bound;
  v.holds = lower_ok && upper_ok;
  // Only the bracket is claimed; no uniqueness statement.
  v.unique = true;
  expect(v, lower_ok, "J = " + to_decimal(j) + " not above t_{d-1}^2 / (3 (d-2)!)");
  expect(v, upper_ok, "J = " + to_decimal(j) + " above d + 2 t_{d-1}^2");
  return v;
}

TheoremVerdict verify_weight_bound(std::size_t d, const numthy::EnumerationOptions& options) {
  TheoremVerdict v;
  v.theorem = "weight-bound";
  v.d = d;
  v.claimed_bound = numthy::sylvester_t(d);
  Integer best = 0;
  numthy::enumerate_unit_partitions(d + 1, options, [&](const numthy::UnitPartition& p) {
    const auto q = weights::partition_to_weights(p);
    if (q.total() != p.total_weight()) throw std::logic_error("|Q| != lcm(k)");
    if (q.total() > best) {
      best = q.total();
      v.extremal_weights.clear();
    }
    if (q.total() == best) v.extremal_weights.push_back(q);
  });
  v.observed = best;
  v.holds = best <= v.claimed_bound;
  v.unique = best == v.claimed_bound && v.extremal_weights == std::vector{weights::sylvester_ws(d)};
  expect(v, v.holds, "|Q| = " + to_decimal(best) + " exceeds t_d");
  expect(v, v.unique, "maximum total weight not attained exactly by Q_d");
  return v;
}

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& v) {
  nlohmann::ordered_json j;
  j["theorem"] = v.theorem;
  j["d"] = v.d;
  j["bound"] = to_decimal(v.claimed_bound);
  j["observed"] = to_decimal(v.observed);
  j["holds"] = v.holds;
  j["unique"] = v.unique;
  auto extremals = nlohmann::ordered_json::array();
  for (const auto& m : v.extremal_classes) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (auto x : m.row(i)) row.push_back(std::to_string(x));
      rows.push_back(std::move(row));
    }
    extremals.push_back(std::move(rows));
  }
  for (const auto& q : v.extremal_weights) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& w : q.weights()) row.push_back(to_decimal(w));
    extremals.push_back(std::move(row));
  }
  j["extremals"] = std::move(extremals);
  if (!v.failures.empty()) j["failures"] = v.failures;
  return j;
}

}  // namespace reflex::verify
