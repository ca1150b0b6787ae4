#include "reflex/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace reflex::classify {

using simplex::LatticeSimplex;
using weights::WeightSystem;

HNFMatrix HNFMatrix::from_matrix(IntMatrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("HNF must be square and non-empty");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) <= 0) throw std::invalid_argument("HNF diagonal must be positive");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > i && m(i, j) != 0) throw std::invalid_argument("HNF must be lower triangular");
      if (j < i && (m(i, j) < 0 || m(i, j) >= m(j, j)))
        throw std::invalid_argument("HNF sub-diagonal entry out of range");
    }
  }
  return HNFMatrix(std::move(m));
}

std::int64_t HNFMatrix::det() const {
  std::int64_t det = 1;
  for (std::size_t i = 0; i < m_.rows(); ++i) det = checked::mul(det, m_(i, i));
  return det;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors of a non-positive number");
  std::vector<std::int64_t> small, large;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// Ordered factorizations of det into d positive factors.
void for_each_diagonal(std::size_t d, std::int64_t det, const std::function<void(const std::vector<std::int64_t>&)>& sink) {
  std::vector<std::int64_t> diag(d);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t rest) {
    if (j + 1 == d) {
      diag[j] = rest;
      sink(diag);
      return;
    }
    for (std::int64_t h : divisors(rest)) {
      diag[j] = h;
      rec(j + 1, rest / h);
    }
  };
  rec(0, det);
}

}  // namespace

void for_each_hnf(std::size_t d, std::int64_t det, const std::function<void(const HNFMatrix&)>& sink) {
  if (d < 1 || det < 1) throw std::invalid_argument("HNF enumeration needs d >= 1 and det >= 1");
  for_each_diagonal(d, det, [&](const std::vector<std::int64_t>& diag) {
    IntMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) h(i, i) = diag[i];
    // Odometer over the strictly lower entries, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) slots.emplace_back(i, j);
    while (true) {
      sink(HNFMatrix(h));
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        if (++h(i, j) < diag[j]) break;
        h(i, j) = 0;
      }
      if (s == slots.size()) break;
    }
  });
}

std::vector<HNFMatrix> hnf_enumerate(std::size_t d, std::int64_t det) {
  std::vector<HNFMatrix> out;
  for_each_hnf(d, det, [&](const HNFMatrix& h) { out.push_back(h); });
  return out;
}

std::int64_t hnf_count(std::size_t d, std::int64_t det) {
  std::int64_t total = 0;
  for_each_diagonal(d, det, [&](const std::vector<std::int64_t>& diag) {
    std::int64_t c = 1;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) c = checked::mul(c, diag[j]);
    total = checked::add(total, c);
  });
  return total;
}

bool record_order(const ClassRecord& a, const ClassRecord& b) {
  if (a.volume != b.volume) return a.volume > b.volume;
  return a.canonical_vertices < b.canonical_vertices;
}

namespace {

// Dual vertices of P_Q as integer numerators over a common denominator.
struct DualRow {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
};

std::vector<DualRow> integer_duals(const LatticeSimplex& s) {
  std::vector<DualRow> rows;
  for (const auto& eta : simplex::dual(s).vertices) {
    DualRow row;
    for (const auto& f : eta) row.den = checked::mul(row.den / gcd64(row.den, f.den), f.den);
    for (const auto& f : eta) row.num.push_back(checked::mul(f.num, row.den / f.den));
    rows.push_back(std::move(row));
  }
  return rows;
}

class PrunedSearch {
 public:
  PrunedSearch(const LatticeSimplex& pq, std::vector<std::int64_t> diag, std::function<void(const IntMatrix&)> sink)
      : d_(pq.dim()), duals_(integer_duals(pq)), diag_(std::move(diag)), sink_(std::move(sink)), h_(d_, d_),
        x_(duals_.size(), std::vector<std::int64_t>(d_)) {
    for (std::size_t i = 0; i < d_; ++i) h_(i, i) = diag_[i];
  }

  void run() { column(d_); }

 private:
  // Columns >= j are fixed and consistent; fill column j - 1.
  void column(std::size_t j) {
    if (j == 0) {
      sink_(h_);
      return;
    }
    const std::size_t c = j - 1;
    const std::int64_t pivot = diag_[c];
    while (true) {
      if (solve(c)) column(c);
      std::size_t k = c + 1;
      for (; k < d_; ++k) {
        if (++h_(k, c) < pivot) break;
        h_(k, c) = 0;
      }
      if (k == d_) break;
    }
  }

  // x_c = (eta_c - sum_{k>c} h(k, c) x_k) / h(c, c) must be integral for every dual vertex.
  bool solve(std::size_t c) {
    for (std::size_t v = 0; v < duals_.size(); ++v) {
      const auto& row = duals_[v];
      std::int64_t s = 0;
      for (std::size_t k = c + 1; k < d_; ++k) s = checked::add(s, checked::mul(h_(k, c), x_[v][k]));
      const std::int64_t numerator = checked::sub(row.num[c], checked::mul(row.den, s));
      const std::int64_t divisor = checked::mul(row.den, h_(c, c));
      if (numerator % divisor != 0) return false;
      x_[v][c] = numerator / divisor;
    }
    return true;
  }

  std::size_t d_;
  std::vector<DualRow> duals_;
  std::vector<std::int64_t> diag_;
  std::function<void(const IntMatrix&)> sink_;
  IntMatrix h_;
  std::vector<std::vector<std::int64_t>> x_;
};

void check_candidate(const WeightSystem& q, std::int64_t lambda, const LatticeSimplex& s) {
  if (!simplex::is_reflexive(s)) throw std::logic_error("pruned search kept a non-reflexive simplex " + s.to_string());
  if (weights::reduce(simplex::weight_system_of(s)) != q)
    throw std::logic_error("candidate " + s.to_string() + " changed the reduced weight system");
  if (simplex::factor_of(s) != lambda) throw std::logic_error("candidate factor differs from det H");
}

std::int64_t m_as_int(const WeightSystem& q) { return to_int64(weights::m_of(q).as_integer()); }

}  // namespace

std::vector<LatticeSimplex> reflexive_candidates(const WeightSystem& q) {
  if (!weights::is_reflexive(q)) throw std::invalid_argument("weight system " + q.to_string() + " is not reflexive");
  const LatticeSimplex pq = simplex::build_PQ(q);
  const std::size_t d = pq.dim();
  std::vector<LatticeSimplex> out;
  for (std::int64_t lambda : divisors(m_as_int(q))) {
    for_each_diagonal(d, lambda, [&](const std::vector<std::int64_t>& diag) {
      PrunedSearch(pq, diag, [&](const IntMatrix& h) {
        auto s = simplex::transform(h, pq);
        check_candidate(q, lambda, s);
        out.push_back(std::move(s));
      }).run();
    });
  }
  return out;
}

std::vector<LatticeSimplex> reflexive_candidates_exhaustive(const WeightSystem& q) {
  if (!weights::is_reflexive(q)) throw std::invalid_argument("weight system " + q.to_string() + " is not reflexive");
  const LatticeSimplex pq = simplex::build_PQ(q);
  std::vector<LatticeSimplex> out;
  for (std::int64_t lambda : divisors(m_as_int(q))) {
    for_each_hnf(pq.dim(), lambda, [&](const HNFMatrix& h) {
      auto s = simplex::transform(h.entries(), pq);
      if (!simplex::is_reflexive(s)) return;
      if (weights::reduce(simplex::weight_system_of(s)) != q) return;
      out.push_back(std::move(s));
    });
  }
  return out;
}

ClassRecord make_record(const WeightSystem& q, const LatticeSimplex& s) {
  const IntMatrix canonical = simplex::canonical_form(s);
  const LatticeSimplex dual = simplex::dual(s).to_lattice();
  return ClassRecord{
      .d = s.dim(),
      .reduced_weights = q,
      .partition = weights::weights_to_partition(q),
      .m = weights::m_of(q).as_integer(),
      .lambda = simplex::factor_of(s),
      .canonical_vertices = canonical,
      .volume = simplex::volume(s),
      .lattice_points = simplex::lattice_points(s).count,
      .max_edge_points = simplex::edge_lattice_counts(s).max_points(),
      .self_dual = simplex::canonical_form(dual) == canonical,
  };
}

std::vector<ClassRecord> classify_weight_system(const WeightSystem& q) {
  std::set<IntMatrix> seen;
  std::vector<ClassRecord> records;
  for (const auto& s : reflexive_candidates(q)) {
    if (!seen.insert(simplex::canonical_form(s)).second) continue;
    records.push_back(make_record(q, s));
  }
  std::sort(records.begin(), records.end(), record_order);
  return records;
}

std::vector<ClassRecord> classify_dimension(std::size_t d, const ClassifyOptions& options) {
  if (options.max_dimension > kHardMaxDimension)
    throw std::invalid_argument("classification supports d <= " + std::to_string(kHardMaxDimension));
  if (d < 2 || d > options.max_dimension)
    throw std::invalid_argument("classification dimension " + std::to_string(d) + " outside [2, " +
                                std::to_string(options.max_dimension) + "]");
  const auto systems = weights::reflexive_weight_systems(d + 1);
  std::vector<std::vector<ClassRecord>> per_system(systems.size());

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(systems.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= systems.size()) return;
      try {
        per_system[i] = classify_weight_system(systems[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassRecord> all;
  for (auto& v : per_system) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(all.begin(), all.end(), record_order);
  return all;
}

}  // namespace reflex::classify
