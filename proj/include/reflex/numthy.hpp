#pragma once

#include "reflex/integer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

/// Sylvester-sequence arithmetic, unit-partition enumeration and the
/// inequality sweeps over unit partitions.
namespace reflex::numthy {

/// Memoized Sylvester numbers y_n (y_0 = 2, y_n = 1 + y_0 ... y_{n-1}) and
/// t_n = y_n - 1. Both recurrences are evaluated and must agree.
class SylvesterCache {
 public:
  SylvesterCache();

  const Integer& y(std::size_t n);
  const Integer& t(std::size_t n);

 private:
  void extend_to(std::size_t n);

  std::vector<Integer> ys_;
  std::vector<Integer> ts_;
  Integer running_product_;
};

/// y_n from a process-wide cache. Thread-safe.
Integer sylvester(std::size_t n);
/// t_n = y_n - 1.
Integer sylvester_t(std::size_t n);

/// A multiset of positive integers whose reciprocals sum to one, stored
/// sorted ascending.
class UnitPartition {
 public:
  /// Sorts and validates; throws std::invalid_argument if the reciprocals
  /// do not sum to exactly one.
  static UnitPartition from_denominators(std::vector<Integer> ks);

  const std::vector<Integer>& denominators() const { return ks_; }
  std::size_t length() const { return ks_.size(); }
  /// Dimension d of the associated simplex (length - 1).
  std::size_t dimension() const { return ks_.size() - 1; }
  /// lcm of all denominators.
  const Integer& total_weight() const { return total_weight_; }
  const Integer& operator[](std::size_t i) const { return ks_[i]; }
  Integer product() const;

  std::string to_string() const;

  friend bool operator==(const UnitPartition& a, const UnitPartition& b) { return a.ks_ == b.ks_; }
  friend bool operator<(const UnitPartition& a, const UnitPartition& b) { return a.ks_ < b.ks_; }

 private:
  struct Trusted {};
  UnitPartition(Trusted, std::vector<Integer> ks);

  std::vector<Integer> ks_;
  Integer total_weight_;

  friend class PartitionEnumerator;
};

/// (y_0, ..., y_{d-1}, t_d). Requires d >= 2.
UnitPartition sylvester_partition(std::size_t d);
/// (y_0, ..., y_{d-2}, 2 t_{d-1}, 2 t_{d-1}). Requires d >= 2.
UnitPartition enlarged_sylvester_partition(std::size_t d);

struct EnumerationOptions {
  /// Caps every denominator. When unset, the bound t_{n-1} is verified on
  /// every emitted partition instead of being used for pruning.
  std::optional<Integer> max_denominator;
  /// Lengths above this are rejected.
  std::size_t max_length = 7;
};

inline constexpr std::size_t kDefaultMaxPartitionLength = 7;

/// Streams every unit partition of length n exactly once, in lexicographic
/// order of the sorted tuple.
void enumerate_unit_partitions(std::size_t n, const EnumerationOptions& options,
                               const std::function<void(const UnitPartition&)>& sink);
std::vector<UnitPartition> unit_partitions(std::size_t n, const EnumerationOptions& options = {});
std::size_t count_unit_partitions(std::size_t n, const EnumerationOptions& options = {});

/// Verdicts of the three product inequalities for one partition.
struct KpropReport {
  UnitPartition partition;
  Integer lcm;
  Integer product;
  Integer head_product;  // k_0 ... k_{d-1}

  // lcm^2 <= prod <= t_d^2
  bool lcm_square_bound = false;
  bool lcm_square_divides = false;  // prod / lcm^2 is an integer
  bool product_upper_bound = false;
  // (d+1)^(d+1) <= prod
  bool amgm_lower_bound = false;
  // Only for d >= 3: prod / lcm <= head <= 2 t_{d-1}^2
  bool head_applicable = false;
  bool quotient_head_bound = false;
  bool head_upper_bound = false;

  // Which bounds are attained with equality.
  bool product_upper_equal = false;
  bool amgm_equal = false;
  bool head_upper_equal = false;

  // Shape of the partition, from constructively built references.
  bool is_sylvester = false;
  bool is_all_equal = false;
  bool is_enlarged_sylvester = false;
  bool is_two_six_six_six = false;

  /// All applicable bounds hold and every equality occurs exactly at the
  /// expected shapes.
  bool holds() const;
};

KpropReport check_kprop(const UnitPartition& p);

/// Sweep outcome for one statement over a whole family.
struct SweepVerdict {
  std::string statement;
  std::size_t length = 0;
  std::size_t checked = 0;
  bool holds = true;
  std::vector<UnitPartition> extremals;
  std::optional<UnitPartition> counterexample;
};

/// Runs check_kprop on every partition of length n and aggregates per
/// statement: "lcm-square-bound", "product-upper-bound", "amgm-lower-bound",
/// and for n >= 4 "head-product-bound".
std::vector<SweepVerdict> kprop_sweep(std::size_t n, const EnumerationOptions& options = {});

/// Max denominator <= t_{n-1} with equality only at the Sylvester partition,
/// plus the head-sum form sum_{i<n-1} 1/k_i <= 1 - 1/t_{n-1}.
std::vector<SweepVerdict> curtiss_corollary_sweep(std::size_t n, const EnumerationOptions& options = {});

struct CrucInequalityCase {
  std::size_t n = 0;
  std::size_t r = 0;
  bool holds = false;
  bool equal = false;
};

struct CrucInequalityVerdict {
  bool holds = true;  // inequality everywhere, equality set exactly {r = 1} u {(4, 2)}
  std::vector<CrucInequalityCase> cases;
};

/// (r+1)^r t_{n-r-1}^{r+1} <= 2 t_{n-2}^2 for 4 <= n <= n_max, 1 <= r <= n-1.
CrucInequalityCase cruc_inequality_case(std::size_t n, std::size_t r);
CrucInequalityVerdict cruc_inequality_check(std::size_t n_max);

/// Decimal digits of the Vardi constant shipped as the default configuration.
inline constexpr const char* kVardiConstantDigits = "1.2640847353053011130795995841646694911145601792091";

enum class FloorVerdict { confirmed, inconclusive, refuted };
const char* to_string(FloorVerdict v);

struct VardiCase {
  std::size_t n = 0;
  FloorVerdict verdict = FloorVerdict::inconclusive;
  Integer expected;  // y_n
  std::optional<Integer> floor_value;
};

struct VardiVerdict {
  FloorVerdict overall = FloorVerdict::confirmed;
  std::vector<VardiCase> cases;
};

/// Checks y_n = floor(c^(2^(n+1)) + 1/2) for 0 <= n <= n_max using the
/// rational interval [c_digits - ulp, c_digits + ulp]. Too few digits give
/// inconclusive cases, never a wrong verdict. n_max <= 6.
VardiVerdict vardi_floor_check(std::size_t n_max, const std::string& c_digits = kVardiConstantDigits);

}  // namespace reflex::numthy
