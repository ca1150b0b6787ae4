#pragma once

#include "reflex/linalg.hpp"
#include "reflex/simplex.hpp"
#include "reflex/weights.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflex::classify {

/// Lower triangular, positive diagonal, 0 <= h(i, j) < h(j, j) for i > j.
class HNFMatrix {
 public:
  static HNFMatrix from_matrix(IntMatrix m);

  const IntMatrix& entries() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  std::int64_t det() const;

  friend bool operator==(const HNFMatrix&, const HNFMatrix&) = default;

 private:
  friend void for_each_hnf(std::size_t, std::int64_t, const std::function<void(const HNFMatrix&)>&);
  explicit HNFMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// Every d x d Hermite normal form of determinant det, exactly once:
/// ordered factorizations of det into diagonals, then all residues below.
void for_each_hnf(std::size_t d, std::int64_t det, const std::function<void(const HNFMatrix&)>& sink);
std::vector<HNFMatrix> hnf_enumerate(std::size_t d, std::int64_t det);
/// Sum over diagonal factorizations of prod_j h_jj^(d-1-j).
std::int64_t hnf_count(std::size_t d, std::int64_t det);

std::vector<std::int64_t> divisors(std::int64_t n);

/// One isomorphism class of reflexive simplices.
struct ClassRecord {
  std::size_t d = 0;
  weights::WeightSystem reduced_weights;
  numthy::UnitPartition partition;
  Integer m;
  std::int64_t lambda = 1;
  IntMatrix canonical_vertices;
  std::int64_t volume = 0;
  std::int64_t lattice_points = 0;
  std::int64_t max_edge_points = 0;
  bool self_dual = false;

  simplex::LatticeSimplex simplex() const { return simplex::LatticeSimplex::from_vertices(canonical_vertices); }

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// Order used for persisted classifications: volume descending, then
/// canonical form.
bool record_order(const ClassRecord& a, const ClassRecord& b);

/// All simplices H P_Q (lambda | m_Q, H Hermite of determinant lambda) that
/// are reflexive, before deduplication. The search fixes H column by column,
/// from the last, and drops a partial H as soon as some dual vertex
/// H^{-T} eta of P_Q has a non-integral coordinate.
std::vector<simplex::LatticeSimplex> reflexive_candidates(const weights::WeightSystem& q);

/// Same set by exhaustive for_each_hnf and a full reflexivity test of every
/// candidate. Slow; used for cross-checking.
std::vector<simplex::LatticeSimplex> reflexive_candidates_exhaustive(const weights::WeightSystem& q);

ClassRecord make_record(const weights::WeightSystem& q, const simplex::LatticeSimplex& s);

/// All isomorphism classes of reflexive simplices with reduced weight
/// system q, deduplicated by canonical form and sorted by record_order.
std::vector<ClassRecord> classify_weight_system(const weights::WeightSystem& q);

struct ClassifyOptions {
  /// Largest dimension accepted; at most kHardMaxDimension.
  std::size_t max_dimension = 4;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 1;
};

inline constexpr std::size_t kHardMaxDimension = 5;

std::vector<ClassRecord> classify_dimension(std::size_t d, const ClassifyOptions& options = {});

/// Raised while loading a classification; carries the 1-based line number.
class LoadError : public std::runtime_error {
 public:
  LoadError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

nlohmann::ordered_json record_to_json(const ClassRecord& r);
/// Parses and validates every invariant of a record; throws
/// std::invalid_argument on a violation.
ClassRecord record_from_json(const nlohmann::json& j);

void save_classification(const std::vector<ClassRecord>& records, const std::string& path);
std::vector<ClassRecord> load_classification(const std::string& path);

}  // namespace reflex::classify
