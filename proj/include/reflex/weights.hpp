#pragma once

#include "reflex/integer.hpp"
#include "reflex/numthy.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reflex::weights {

/// Positive integer weights (q_0, ..., q_d). Stored sorted descending, so two
/// weight systems are isomorphic iff they compare equal.
class WeightSystem {
 public:
  static WeightSystem from_weights(std::vector<Integer> qs);

  const std::vector<Integer>& weights() const { return qs_; }
  const Integer& operator[](std::size_t i) const { return qs_[i]; }
  std::size_t length() const { return qs_.size(); }
  std::size_t dimension() const { return qs_.size() - 1; }
  const Integer& total() const { return total_; }
  /// gcd of all weights.
  const Integer& factor() const { return factor_; }

  bool is_reduced() const { return factor_ == 1; }
  /// Every d-element sub-gcd is one.
  bool is_normalized() const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.qs_ == b.qs_; }
  friend bool operator<(const WeightSystem& a, const WeightSystem& b) { return a.qs_ < b.qs_; }

 private:
  explicit WeightSystem(std::vector<Integer> qs);

  std::vector<Integer> qs_;
  Integer total_;
  Integer factor_;
};

WeightSystem reduce(const WeightSystem& q);

/// Reduced and every weight divides the total weight.
bool is_reflexive(const WeightSystem& q);

/// |Q|^(d-1) / (q_0 ... q_d), exact. Integral whenever q is reflexive.
struct MQValue {
  Rational value;

  bool is_integer() const { return boost::multiprecision::denominator(value) == 1; }
  Integer as_integer() const;
};

MQValue m_of(const WeightSystem& q);

/// q_i = lcm(k) / k_i. The result is reflexive.
WeightSystem partition_to_weights(const numthy::UnitPartition& p);
/// k_i = |Q| / q_i; rejects non-reflexive input.
numthy::UnitPartition weights_to_partition(const WeightSystem& q);

/// Q_d = (t_d / y_0, ..., t_d / y_{d-1}, 1).
WeightSystem sylvester_ws(std::size_t d);
/// Q'_d = (2 t_{d-1} / y_0, ..., 2 t_{d-1} / y_{d-2}, 1, 1).
WeightSystem enlarged_sylvester_ws(std::size_t d);

/// All reflexive weight systems of length n, in the order of their unit
/// partitions.
std::vector<WeightSystem> reflexive_weight_systems(std::size_t n,
                                                   const numthy::EnumerationOptions& options = {});

}  // namespace reflex::weights
