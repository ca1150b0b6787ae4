#pragma once

#include "reflex/classify.hpp"

#include "json.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

/// Replays the volume, edge and volume-product bounds for reflexive simplices
/// against a complete classification.
namespace reflex::verify {

struct TheoremVerdict {
  std::string theorem;
  std::size_t d = 0;
  Integer claimed_bound;
  Integer observed;
  /// Canonical forms of the records attaining the observed extremum.
  std::vector<IntMatrix> extremal_classes;
  /// Weight systems attaining the extremum, for weight-level statements.
  std::vector<weights::WeightSystem> extremal_weights;
  bool holds = false;
  bool unique = false;
  /// Human-readable reasons for a failed verdict.
  std::vector<std::string> failures;

  bool passed() const { return holds && unique; }
};

class IncompleteClassification : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every record has dimension d and every reflexive weight system of length
/// d+1 appears, together with its lambda = m_Q class, and the records are
/// closed under duality.
void require_complete(std::size_t d, const std::vector<classify::ClassRecord>& records);

/// Largest volume: 9 for d = 2, 2 t_{d-1}^2 for d >= 3, with the expected
/// extremal classes built from S_Q.
TheoremVerdict verify_theorem_A(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// Largest lattice-point count for d = 2 (10) and d = 3 (39).
TheoremVerdict verify_theorem_A_points(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// Largest edge point count 2 t_{d-1} + 1, attained only by S_{Q'_d}.
TheoremVerdict verify_theorem_B(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// (d+1)^(d+1) <= Vol(P) Vol(P*) <= t_d^2 with both equality cases.
TheoremVerdict verify_theorem_C(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// Vol(P*) <= t_d when the dual vertices generate the lattice.
TheoremVerdict verify_theorem_C_dual_volume(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// t_{d-1}^2 / (3 (d-2)!) < J <= d + 2 t_{d-1}^2, J the largest point count. d >= 3.
TheoremVerdict verify_corollary_bracket(std::size_t d, const std::vector<classify::ClassRecord>& records);
/// |Q| <= t_d over all reflexive weight systems, equality only at Q_d.
TheoremVerdict verify_weight_bound(std::size_t d, const numthy::EnumerationOptions& options = {});

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& v);

}  // namespace reflex::verify
