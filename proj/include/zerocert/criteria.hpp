#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zerocert/degree.hpp"
#include "zerocert/geometry.hpp"
#include "zerocert/homotopy.hpp"
#include "zerocert/mapspec.hpp"
#include "zerocert/vec.hpp"

namespace zerocert {

/// Outcome of one boundary check. `margin` is the minimized quantity and
/// `witness` the boundary point attaining it.
struct CheckResult {
  std::string check;
  bool passed = false;
  double margin = 0.0;
  double threshold = 0.0;
  std::optional<Vec> witness;
  Rigor rigor = Rigor::Heuristic;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Verdict { ZeroGuaranteed, NoConclusion, ZeroOnBoundary };
enum class Route { SignChange, Winding, PoincareBohl, CoerciveReduction };

const char* to_string(Verdict v);
const char* to_string(Route r);
Verdict verdict_from_string(const std::string& s);
Route route_from_string(const std::string& s);

struct Certificate {
  std::string map_digest;
  Region region = Region::unit_disk(1);
  Verdict verdict = Verdict::NoConclusion;
  std::optional<Route> route;
  std::optional<long> obstruction;
  /// cat classification behind the verdict, when one was computed.
  std::optional<CatReason> reason;
  double min_boundary_norm = 0.0;
  Rigor rigor = Rigor::Heuristic;
  std::vector<CheckResult> evidence;
  bool extension_witness_present = false;
  /// Zero-free extension of the boundary map (NoConclusion with a vanishing
  /// obstruction only). Not serialized.
  std::shared_ptr<const RadialExtension> extension_witness;
};

/// Certificates compare by their serialized fields; the witness evaluator is
/// ignored.
bool same_record(const Certificate& a, const Certificate& b);

struct CertifyOptions {
  int level = 3;
  std::optional<double> lipschitz;
  /// Use `lipschitz` for thresholds but label everything heuristic (for
  /// estimated constants).
  bool force_heuristic = false;
  int refine_budget = kDefaultRefineBudget;
  int t_steps = 64;
};

/// Scale-aware exact-hit tolerance: 1e-12 (1 + sup |F|).
double zero_tolerance(double sup_norm);

/// margin = min |F(x)| over the sampled boundary sphere; rigorous pass iff
/// margin > L h / 2.
CheckResult boundary_nonvanishing(const VectorField& field, const Region& disk, int level,
                                  std::optional<double> lipschitz = std::nullopt);

/// "Never points opposite": margin = min |F(x)/|F(x)| + (x - x0)/r|, which is
/// zero exactly where F(x) is a negative multiple of x - x0. With a Lipschitz
/// bound L for F the threshold uses the bound 2L/min|F| + 1/r of the checked
/// unit-vector field. Throws VanishingOnBoundary on a (near) zero image.
CheckResult poincare_bohl(const VectorField& field, const Region& disk, int level,
                          std::optional<double> lipschitz = std::nullopt);

/// First R in `radii` such that min <F(x), x> >= 0 and F does not vanish on
/// the sampled sphere S^{n-1}_R(0).
std::optional<std::pair<double, CheckResult>> coercivity_radius(const VectorField& field, int n,
                                                                std::span<const double> radii,
                                                                int level);

/// Existence certificate for F(x) = 0 on a disk of any center and radius.
///
/// Pipeline: boundary zero => ZeroOnBoundary; n < m => NoConclusion
/// (codomain_dim_excess); n = m = 1 sign change => ZeroGuaranteed; n = m = 2
/// nonzero winding => ZeroGuaranteed, zero winding => NoConclusion with a
/// zero-free extension witness; otherwise Poincare-Bohl. n > m throws
/// Unsupported.
Certificate certify_existence(const VectorField& field, const Region& disk,
                              const CertifyOptions& opts = {}, std::string digest = {});
Certificate certify_existence(const MapSpec& spec, const Region& disk, const CertifyOptions& opts = {});

/// Coercive maps on R^n: finds a radius via coercivity_radius, then certifies
/// D^n_R(0) through the never-points-opposite condition.
Certificate certify_coercive(const VectorField& field, std::span<const double> radii,
                             const CertifyOptions& opts = {}, std::string digest = {});

}  // namespace zerocert
