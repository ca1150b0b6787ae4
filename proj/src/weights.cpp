#include "reflex/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace reflex::weights {

WeightSystem::WeightSystem(std::vector<Integer> qs) : qs_(std::move(qs)), total_(0), factor_(0) {
  std::sort(qs_.begin(), qs_.end(), std::greater<>());
  for (const auto& q : qs_) {
    total_ += q;
    factor_ = gcd(factor_, q);
  }
}

WeightSystem WeightSystem::from_weights(std::vector<Integer> qs) {
  if (qs.size() < 2) throw std::invalid_argument("weight system needs at least two weights");
  for (const auto& q : qs)
    if (q <= 0) throw std::invalid_argument("weights must be positive");
  return WeightSystem(std::move(qs));
}

bool WeightSystem::is_normalized() const {
  for (std::size_t skip = 0; skip < qs_.size(); ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < qs_.size(); ++i)
      if (i != skip) g = gcd(g, qs_[i]);
    if (g != 1) return false;
  }
  return true;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < qs_.size(); ++i) os << (i ? "," : "") << qs_[i];
  os << ')';
  return os.str();
}

WeightSystem reduce(const WeightSystem& q) {
  std::vector<Integer> qs = q.weights();
  for (auto& w : qs) w /= q.factor();
  return WeightSystem::from_weights(std::move(qs));
}

bool is_reflexive(const WeightSystem& q) {
  if (!q.is_reduced()) return false;
  return std::all_of(q.weights().begin(), q.weights().end(),
                     [&](const Integer& w) { return q.total() % w == 0; });
}

Integer MQValue::as_integer() const {
  if (!is_integer()) throw std::domain_error("m_Q = " + to_decimal(value) + " is not an integer");
  return boost::multiprecision::numerator(value);
}

MQValue m_of(const WeightSystem& q) {
  Integer product = 1;
  for (const auto& w : q.weights()) product *= w;
  const auto d = static_cast<unsigned>(q.dimension());
  const Integer num = boost::multiprecision::pow(q.total(), d - 1);
  MQValue m{Rational(num, product)};
  if (is_reflexive(q) && !m.is_integer())
    throw std::logic_error("m_Q of reflexive " + q.to_string() + " is not integral");
  return m;
}

WeightSystem partition_to_weights(const numthy::UnitPartition& p) {
  std::vector<Integer> qs;
  for (const auto& k : p.denominators()) qs.push_back(p.total_weight() / k);
  auto q = WeightSystem::from_weights(std::move(qs));
  if (!is_reflexive(q)) throw std::logic_error("partition image " + q.to_string() + " is not reflexive");
  return q;
}

numthy::UnitPartition weights_to_partition(const WeightSystem& q) {
  if (!is_reflexive(q)) throw std::invalid_argument("weight system " + q.to_string() + " is not reflexive");
  std::vector<Integer> ks;
  for (const auto& w : q.weights()) ks.push_back(q.total() / w);
  return numthy::UnitPartition::from_denominators(std::move(ks));
}

WeightSystem sylvester_ws(std::size_t d) {
  if (d < 2) throw std::invalid_argument("Sylvester weight system needs d >= 2");
  const Integer t = numthy::sylvester_t(d);
  std::vector<Integer> qs;
  for (std::size_t i = 0; i < d; ++i) qs.push_back(t / numthy::sylvester(i));
  qs.push_back(1);
  return WeightSystem::from_weights(std::move(qs));
}

WeightSystem enlarged_sylvester_ws(std::size_t d) {
  if (d < 2) throw std::invalid_argument("enlarged Sylvester weight system needs d >= 2");
  const Integer t = 2 * numthy::sylvester_t(d - 1);
  std::vector<Integer> qs;
  for (std::size_t i = 0; i + 1 < d; ++i) qs.push_back(t / numthy::sylvester(i));
  qs.push_back(1);
  qs.push_back(1);
  return WeightSystem::from_weights(std::move(qs));
}

std::vector<WeightSystem> reflexive_weight_systems(std::size_t n, const numthy::EnumerationOptions& options) {
  std::vector<WeightSystem> out;
  numthy::enumerate_unit_partitions(n, options,
                                    [&](const numthy::UnitPartition& p) { out.push_back(partition_to_weights(p)); });
  return out;
}

}  // namespace reflex::weights
