#pragma once

#include <optional>
#include <string>

#include "zerocert/homotopy.hpp"
#include "zerocert/vec.hpp"

namespace zerocert {

/// Steps between consecutive images at or above this angle are refined.
inline constexpr double kMaxStepAngle = 1.5707963267948966;  // pi / 2
/// Largest |total / 2pi - round(total / 2pi)| accepted as rigorous.
inline constexpr double kWindingResidualTolerance = 0.05;
inline constexpr int kDefaultRefineBudget = 4096;

struct WindingResult {
  long value = 0;
  int total_refinements = 0;
  Rigor rigor = Rigor::Heuristic;
  double max_step_angle = 0.0;
  /// total / 2pi - value, before rounding.
  double residual = 0.0;
  /// Smallest image norm over all samples, including inserted ones.
  double min_norm = 0.0;
  /// Largest chord between consecutive samples after refinement.
  double h = 0.0;
};

/// Winding number of a planar closed boundary map around the origin.
///
/// Sums signed angle increments atan2(a x b, a . b) between consecutive
/// images. An arc whose increment has magnitude >= pi/2 is split at its
/// parameter midpoint, re-evaluating `field`, until every step is below pi/2
/// or `refine_budget` insertions are spent. The result is rigorous only when
/// every step is below pi/2, a Lipschitz bound L is supplied, and
/// min |f| > L h / 2.
///
/// Throws VanishingOnBoundary on a zero image and BudgetExhausted (with the
/// rounded best estimate) when large steps remain.
WindingResult winding_number(const SampledMap& f, const VectorField& field,
                             int refine_budget = kDefaultRefineBudget,
                             std::optional<double> lipschitz = std::nullopt);

/// Same as above without re-evaluation: any step >= pi/2 is BudgetExhausted.
WindingResult winding_number(const SampledMap& f, std::optional<double> lipschitz = std::nullopt);

/// Samples `field` on `sampling` and computes its winding number.
WindingResult winding_on_boundary(const VectorField& field, const BoundarySampling& sampling,
                                  int refine_budget = kDefaultRefineBudget,
                                  std::optional<double> lipschitz = std::nullopt);

/// Component obstruction of a map S^0 -> R \ {0}: 0 when both values share a
/// sign, otherwise the sign of the value at the upper endpoint.
int sign_obstruction(const SampledMap& f);

enum class CatReason { WindingNonzero, SignChange, CodomainDimExcess, WindingZero, SameComponent };

const char* to_string(CatReason reason);
CatReason cat_reason_from_string(const std::string& s);

struct CatResult {
  int cat = 1;
  CatReason reason = CatReason::SameComponent;
  std::optional<WindingResult> winding;
  std::optional<int> sign;
};

struct CatOptions {
  /// Re-evaluated during winding refinement when present.
  const VectorField* field = nullptr;
  int refine_budget = kDefaultRefineBudget;
  std::optional<double> lipschitz;
};

/// cat(f) in {1, 2} of a boundary map S^{n-1} -> R^m \ {0}:
///   n < m:      1 (every such map is null-homotopic);
///   n = m = 1:  2 iff the sign obstruction is nonzero;
///   n = m = 2:  2 iff the winding number is nonzero.
/// Other (n, m) throw Unsupported.
CatResult classify_cat(const SampledMap& f, int n, int m, const CatOptions& opts = {});

}  // namespace zerocert
