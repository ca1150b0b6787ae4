#include "reflex/numthy.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace reflex::numthy {

SylvesterCache::SylvesterCache() {
  ys_.push_back(2);
  ts_.push_back(1);
  running_product_ = 2;
}

void SylvesterCache::extend_to(std::size_t n) {
  while (ys_.size() <= n) {
    const Integer& prev = ys_.back();
    Integer by_product = running_product_ + 1;
    Integer by_square = prev * prev - prev + 1;
    if (by_product != by_square) throw std::logic_error("Sylvester recurrences disagree");
    Integer t = ts_.back() * prev;
    if (t != by_product - 1) throw std::logic_error("t_n != t_{n-1} y_{n-1}");
    running_product_ *= by_product;
    ys_.push_back(std::move(by_product));
    ts_.push_back(std::move(t));
  }
}

const Integer& SylvesterCache::y(std::size_t n) {
  extend_to(n);
  return ys_[n];
}

const Integer& SylvesterCache::t(std::size_t n) {
  extend_to(n);
  return ts_[n];
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

SylvesterCache& global_cache() {
  static SylvesterCache cache;
  return cache;
}

// (y_0, ..., y_{d-1}, t_d) for any d >= 0.
std::vector<Integer> sylvester_tuple(std::size_t d) {
  std::vector<Integer> ks;
  for (std::size_t i = 0; i < d; ++i) ks.push_back(sylvester(i));
  ks.push_back(sylvester_t(d));
  std::sort(ks.begin(), ks.end());
  return ks;
}

// (y_0, ..., y_{d-2}, 2 t_{d-1}, 2 t_{d-1}) for d >= 1.
std::vector<Integer> enlarged_tuple(std::size_t d) {
  std::vector<Integer> ks;
  for (std::size_t i = 0; i + 1 < d; ++i) ks.push_back(sylvester(i));
  ks.push_back(2 * sylvester_t(d - 1));
  ks.push_back(2 * sylvester_t(d - 1));
  std::sort(ks.begin(), ks.end());
  return ks;
}

Integer lcm_of(const std::vector<Integer>& ks) {
  Integer l = 1;
  for (const auto& k : ks) l = lcm(l, k);
  return l;
}

}  // namespace

Integer sylvester(std::size_t n) {
  std::lock_guard lock(cache_mutex());
  return global_cache().y(n);
}

Integer sylvester_t(std::size_t n) {
  std::lock_guard lock(cache_mutex());
  return global_cache().t(n);
}

UnitPartition::UnitPartition(Trusted, std::vector<Integer> ks) : ks_(std::move(ks)), total_weight_(lcm_of(ks_)) {}

UnitPartition UnitPartition::from_denominators(std::vector<Integer> ks) {
  if (ks.empty()) throw std::invalid_argument("unit partition must be non-empty");
  Rational sum = 0;
  for (const auto& k : ks) {
    if (k <= 0) throw std::invalid_argument("unit partition entries must be positive");
    sum += Rational(1, k);
  }
  if (sum != 1) throw std::invalid_argument("reciprocals sum to " + to_decimal(sum) + ", not 1");
  std::sort(ks.begin(), ks.end());
  return UnitPartition(Trusted{}, std::move(ks));
}

Integer UnitPartition::product() const {
  Integer p = 1;
  for (const auto& k : ks_) p *= k;
  return p;
}

std::string UnitPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ks_.size(); ++i) os << (i ? "," : "") << ks_[i];
  os << ')';
  return os.str();
}

UnitPartition sylvester_partition(std::size_t d) {
  if (d < 2) throw std::invalid_argument("Sylvester partition needs d >= 2");
  return UnitPartition::from_denominators(sylvester_tuple(d));
}

UnitPartition enlarged_sylvester_partition(std::size_t d) {
  if (d < 2) throw std::invalid_argument("enlarged Sylvester partition needs d >= 2");
  return UnitPartition::from_denominators(enlarged_tuple(d));
}

// Depth-first search over sorted prefixes. With m slots left and remainder
// a/b, the next denominator k satisfies b/a < k <= m b / a. The last two slots
// are solved in closed form: 1/x + 1/y = a/b  <=>  (ax - b)(ay - b) = b^2, so
// x runs over divisors D <= b of b^2 with D = -b (mod a).
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, const EnumerationOptions& options,
                      const std::function<void(const UnitPartition&)>& sink)
      : n_(n), cap_(options.max_denominator), sink_(sink), curtiss_bound_(sylvester_t(n - 1)) {}

  void run() {
    prefix_.reserve(n_);
    recurse(1, 1, 1);
  }

 private:
  static constexpr std::uint64_t kFactorLimit = 1'000'000'000'000ULL;

  void emit(std::vector<Integer> ks) {
    if (!cap_ && ks.back() > curtiss_bound_)
      throw std::logic_error("partition exceeds max denominator t_{n-1}: " +
                             UnitPartition(UnitPartition::Trusted{}, ks).to_string());
    sink_(UnitPartition(UnitPartition::Trusted{}, std::move(ks)));
  }

  bool within_cap(const Integer& k) const { return !cap_ || k <= *cap_; }

  void recurse(const Integer& a, const Integer& b, const Integer& prev) {
    const std::size_t slots = n_ - prefix_.size();
    if (slots == 1) {
      if (a == 1 && b >= prev && within_cap(b)) {
        auto ks = prefix_;
        ks.push_back(b);
        emit(std::move(ks));
      }
      return;
    }
    if (slots == 2) {
      if (factorable_) {
        two_slots_by_divisors(a, b, prev);
      } else {
        two_slots_by_scan(a, b, prev);
      }
      return;
    }
    Integer lo = b / a + 1;
    if (lo < prev) lo = prev;
    Integer hi = (slots * b) / a;
    if (cap_ && hi > *cap_) hi = *cap_;
    for (Integer k = lo; k <= hi; ++k) {
      Integer na = a * k - b;
      Integer nb = b * k;
      const Integer g = gcd(na, nb);
      na /= g;
      nb /= g;
      const std::size_t primes_before = primes_.size();
      const bool factorable_before = factorable_;
      record_factors(k);
      prefix_.push_back(k);
      recurse(na, nb, k);
      prefix_.pop_back();
      primes_.resize(primes_before);
      factorable_ = factorable_before;
    }
  }

  void record_factors(const Integer& k) {
    if (!factorable_) return;
    if (k > kFactorLimit) {
      factorable_ = false;
      return;
    }
    std::uint64_t v = k.convert_to<std::uint64_t>();
    auto add = [&](std::uint64_t p) {
      if (std::find(primes_.begin(), primes_.end(), p) == primes_.end()) primes_.push_back(p);
    };
    for (std::uint64_t p = 2; p * p <= v; ++p) {
      if (v % p == 0) {
        add(p);
        while (v % p == 0) v /= p;
      }
    }
    if (v > 1) add(v);
  }

  void two_slots_by_divisors(const Integer& a, const Integer& b, const Integer& prev) {
    // The reduced denominator b divides the lcm of the prefix.
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    Integer rest = b;
    for (std::uint64_t p : primes_) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e) factors.emplace_back(p, 2 * e);
    }
    if (rest != 1) throw std::logic_error("remainder denominator has a prime outside the prefix");

    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [p, e] : factors) {
      const std::size_t count = divisors.size();
      for (std::size_t i = 0; i < count; ++i) {
        Integer d = divisors[i];
        for (unsigned j = 0; j < e; ++j) {
          d *= p;
          if (d > b) break;
          divisors.push_back(d);
        }
      }
    }
    std::sort(divisors.begin(), divisors.end());
    const Integer b_squared = b * b;
    for (const auto& divisor : divisors) {
      Integer x_num = divisor + b;
      if (x_num % a != 0) continue;
      Integer x = x_num / a;
      if (x < prev) continue;
      Integer y_num = b_squared / divisor + b;
      if (y_num % a != 0) throw std::logic_error("inconsistent two-slot solution");
      Integer y = y_num / a;
      if (!within_cap(y)) continue;
      auto ks = prefix_;
      ks.push_back(std::move(x));
      ks.push_back(std::move(y));
      emit(std::move(ks));
    }
  }

  void two_slots_by_scan(const Integer& a, const Integer& b, const Integer& prev) {
    Integer lo = b / a + 1;
    if (lo < prev) lo = prev;
    const Integer hi = (2 * b) / a;
    for (Integer x = lo; x <= hi; ++x) {
      const Integer den = a * x - b;
      const Integer num = b * x;
      if (num % den != 0) continue;
      Integer y = num / den;
      if (!within_cap(y)) continue;
      auto ks = prefix_;
      ks.push_back(x);
      ks.push_back(std::move(y));
      emit(std::move(ks));
    }
  }

  std::size_t n_;
  std::optional<Integer> cap_;
  const std::function<void(const UnitPartition&)>& sink_;
  Integer curtiss_bound_;
  std::vector<Integer> prefix_;
  std::vector<std::uint64_t> primes_;
  bool factorable_ = true;
};

void enumerate_unit_partitions(std::size_t n, const EnumerationOptions& options,
                               const std::function<void(const UnitPartition&)>& sink) {
  if (n < 1) throw std::invalid_argument("partition length must be >= 1");
  if (n > options.max_length)
    throw std::invalid_argument("partition length " + std::to_string(n) + " exceeds limit " +
                                std::to_string(options.max_length));
  PartitionEnumerator(n, options, sink).run();
}

std::vector<UnitPartition> unit_partitions(std::size_t n, const EnumerationOptions& options) {
  std::vector<UnitPartition> out;
  enumerate_unit_partitions(n, options, [&](const UnitPartition& p) { out.push_back(p); });
  return out;
}

std::size_t count_unit_partitions(std::size_t n, const EnumerationOptions& options) {
  std::size_t count = 0;
  enumerate_unit_partitions(n, options, [&](const UnitPartition&) { ++count; });
  return count;
}

bool KpropReport::holds() const {
  if (!(lcm_square_bound && lcm_square_divides && product_upper_bound && amgm_lower_bound)) return false;
  if (product_upper_equal != is_sylvester) return false;
  if (amgm_equal != is_all_equal) return false;
  if (head_applicable) {
    if (!(quotient_head_bound && head_upper_bound)) return false;
    if (head_upper_equal != (is_enlarged_sylvester || is_two_six_six_six)) return false;
  }
  return true;
}

KpropReport check_kprop(const UnitPartition& p) {
  KpropReport r{p, p.total_weight(), p.product(), 1};
  const std::size_t d = p.dimension();
  const auto& ks = p.denominators();
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) r.head_product *= ks[i];

  const Integer lcm_sq = r.lcm * r.lcm;
  const Integer t_d = sylvester_t(d);
  r.lcm_square_bound = lcm_sq <= r.product;
  r.lcm_square_divides = r.product % lcm_sq == 0;
  r.product_upper_bound = r.product <= t_d * t_d;
  r.product_upper_equal = r.product == t_d * t_d;

  const Integer amgm = boost::multiprecision::pow(Integer(d + 1), static_cast<unsigned>(d + 1));
  r.amgm_lower_bound = amgm <= r.product;
  r.amgm_equal = amgm == r.product;

  r.is_sylvester = ks == sylvester_tuple(d);
  r.is_all_equal = std::all_of(ks.begin(), ks.end(), [&](const Integer& k) { return k == d + 1; });
  r.is_enlarged_sylvester = d >= 1 && ks == enlarged_tuple(d);
  r.is_two_six_six_six = ks == std::vector<Integer>{2, 6, 6, 6};

  if (d >= 3) {
    r.head_applicable = true;
    const Integer t_prev = sylvester_t(d - 1);
    const Integer bound = 2 * t_prev * t_prev;
    // prod / lcm <= head, compared without division.
    r.quotient_head_bound = r.product <= r.head_product * r.lcm;
    r.head_upper_bound = r.head_product <= bound;
    r.head_upper_equal = r.head_product == bound;
  }
  return r;
}

namespace {

struct StatementTally {
  SweepVerdict verdict;
  std::vector<UnitPartition> expected;

  void fail(const UnitPartition& p) {
    if (verdict.holds) verdict.counterexample = p;
    verdict.holds = false;
  }

  void finish() {
    std::sort(verdict.extremals.begin(), verdict.extremals.end());
    std::sort(expected.begin(), expected.end());
    if (verdict.extremals != expected) verdict.holds = false;
  }
};

}  // namespace

std::vector<SweepVerdict> kprop_sweep(std::size_t n, const EnumerationOptions& options) {
  const std::size_t d = n - 1;
  StatementTally lcm_stmt{{"lcm-square-bound", n}, {}};
  StatementTally upper_stmt{{"product-upper-bound", n}, {}};
  StatementTally amgm_stmt{{"amgm-lower-bound", n}, {}};
  StatementTally head_stmt{{"head-product-bound", n}, {}};

  upper_stmt.expected.push_back(UnitPartition::from_denominators(sylvester_tuple(d)));
  {
    std::vector<Integer> equal(n, Integer(d + 1));
    amgm_stmt.expected.push_back(UnitPartition::from_denominators(equal));
  }
  if (n >= 4) {
    head_stmt.expected.push_back(UnitPartition::from_denominators(enlarged_tuple(d)));
    if (n == 4) head_stmt.expected.push_back(UnitPartition::from_denominators({2, 6, 6, 6}));
  }

  enumerate_unit_partitions(n, options, [&](const UnitPartition& p) {
    const KpropReport r = check_kprop(p);
    for (auto* s : {&lcm_stmt, &upper_stmt, &amgm_stmt, &head_stmt}) ++s->verdict.checked;
    if (!(r.lcm_square_bound && r.lcm_square_divides)) lcm_stmt.fail(p);
    if (!r.product_upper_bound) upper_stmt.fail(p);
    if (r.product_upper_equal) upper_stmt.verdict.extremals.push_back(p);
    if (!r.amgm_lower_bound) amgm_stmt.fail(p);
    if (r.amgm_equal) amgm_stmt.verdict.extremals.push_back(p);
    if (r.head_applicable) {
      if (!(r.quotient_head_bound && r.head_upper_bound)) head_stmt.fail(p);
      if (r.head_upper_equal) head_stmt.verdict.extremals.push_back(p);
    }
  });

  std::vector<SweepVerdict> out;
  for (auto* s : {&lcm_stmt, &upper_stmt, &amgm_stmt}) {
    s->finish();
    out.push_back(s->verdict);
  }
  if (n >= 4) {
    head_stmt.finish();
    out.push_back(head_stmt.verdict);
  }
  return out;
}

std::vector<SweepVerdict> curtiss_corollary_sweep(std::size_t n, const EnumerationOptions& options) {
  if (n < 2) throw std::invalid_argument("Curtiss sweep needs length >= 2");
  const Integer bound = sylvester_t(n - 1);
  StatementTally max_stmt{{"max-denominator-bound", n}, {}};
  StatementTally head_stmt{{"head-sum-bound", n}, {}};
  max_stmt.expected.push_back(UnitPartition::from_denominators(sylvester_tuple(n - 1)));

  std::vector<Integer> sylvester_head;
  for (std::size_t i = 0; i + 1 < n; ++i) sylvester_head.push_back(sylvester(i));
  const Rational head_bound = 1 - Rational(1, bound);

  // Unlike the enumerator's own guard, the cap is never used for pruning here.
  EnumerationOptions uncapped = options;
  uncapped.max_denominator.reset();
  enumerate_unit_partitions(n, uncapped, [&](const UnitPartition& p) {
    const auto& ks = p.denominators();
    ++max_stmt.verdict.checked;
    ++head_stmt.verdict.checked;
    if (ks.back() > bound) max_stmt.fail(p);
    if (ks.back() == bound) max_stmt.verdict.extremals.push_back(p);

    Rational head_sum = 0;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) head_sum += Rational(1, ks[i]);
    if (head_sum > head_bound) head_stmt.fail(p);
    const bool head_is_sylvester = std::vector<Integer>(ks.begin(), ks.end() - 1) == sylvester_head;
    if ((head_sum == head_bound) != head_is_sylvester) head_stmt.fail(p);
    if (head_sum == head_bound) head_stmt.verdict.extremals.push_back(p);
  });
  max_stmt.finish();
  // The head-sum extremals are whatever partitions have the Sylvester head;
  // correctness of that set is checked per partition above.
  std::sort(head_stmt.verdict.extremals.begin(), head_stmt.verdict.extremals.end());
  return {max_stmt.verdict, head_stmt.verdict};
}

CrucInequalityCase cruc_inequality_case(std::size_t n, std::size_t r) {
  if (n < 4 || r < 1 || r > n - 1) throw std::invalid_argument("need n >= 4 and 1 <= r <= n-1");
  const Integer t_small = sylvester_t(n - r - 1);
  const Integer t_big = sylvester_t(n - 2);
  const Integer lhs = boost::multiprecision::pow(Integer(r + 1), static_cast<unsigned>(r)) *
                      boost::multiprecision::pow(t_small, static_cast<unsigned>(r + 1));
  const Integer rhs = 2 * t_big * t_big;
  return {n, r, lhs <= rhs, lhs == rhs};
}

CrucInequalityVerdict cruc_inequality_check(std::size_t n_max) {
  if (n_max < 4) throw std::invalid_argument("n_max must be >= 4");
  CrucInequalityVerdict v;
  for (std::size_t n = 4; n <= n_max; ++n) {
    for (std::size_t r = 1; r <= n - 1; ++r) {
      auto c = cruc_inequality_case(n, r);
      const bool expect_equal = r == 1 || (n == 4 && r == 2);
      if (!c.holds || c.equal != expect_equal) v.holds = false;
      v.cases.push_back(c);
    }
  }
  return v;
}

const char* to_string(FloorVerdict v) {
  switch (v) {
    case FloorVerdict::confirmed:
      return "confirmed";
    case FloorVerdict::inconclusive:
      return "inconclusive";
    case FloorVerdict::refuted:
      return "refuted";
  }
  return "?";
}

VardiVerdict vardi_floor_check(std::size_t n_max, const std::string& c_digits) {
  if (n_max > 6) throw std::invalid_argument("Vardi floor check supports n <= 6");
  const auto dot = c_digits.find('.');
  const std::string int_part = c_digits.substr(0, dot);
  const std::string frac_part = dot == std::string::npos ? "" : c_digits.substr(dot + 1);
  const std::string all_digits = int_part + frac_part;
  const auto first_nonzero = all_digits.find_first_not_of('0');
  if (first_nonzero == std::string::npos || all_digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("Vardi constant must be a positive decimal, got '" + c_digits + "'");

  // c lies in [(N-1)/10^k, (N+1)/10^k], allowing one unit of error in the last digit.
  const Integer mantissa = parse_integer(all_digits);
  const Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
  const Integer lo = mantissa - 1;
  const Integer hi = mantissa + 1;

  auto rounded_power = [&](const Integer& num, unsigned exponent) {
    const Integer p = boost::multiprecision::pow(num, exponent);
    const Integer s = boost::multiprecision::pow(scale, exponent);
    // floor(p/s + 1/2)
    return Integer((2 * p + s) / (2 * s));
  };

  VardiVerdict v;
  for (std::size_t n = 0; n <= n_max; ++n) {
    VardiCase c;
    c.n = n;
    c.expected = sylvester(n);
    const unsigned exponent = 1u << (n + 1);
    const Integer f_lo = rounded_power(lo, exponent);
    const Integer f_hi = rounded_power(hi, exponent);
    if (f_lo == f_hi) {
      c.floor_value = f_lo;
      c.verdict = f_lo == c.expected ? FloorVerdict::confirmed : FloorVerdict::refuted;
    } else {
      c.verdict = FloorVerdict::inconclusive;
    }
    if (c.verdict == FloorVerdict::refuted)
      v.overall = FloorVerdict::refuted;
    else if (c.verdict == FloorVerdict::inconclusive && v.overall == FloorVerdict::confirmed)
      v.overall = FloorVerdict::inconclusive;
    v.cases.push_back(std::move(c));
  }
  return v;
}

}  // namespace reflex::numthy
