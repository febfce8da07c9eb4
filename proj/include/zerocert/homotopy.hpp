#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zerocert/geometry.hpp"
#include "zerocert/vec.hpp"

namespace zerocert {

/// A boundary map known through its values on a sampling.
struct SampledMap {
  BoundarySampling sampling;
  std::vector<Vec> images;
  int m = 0;

  double min_norm() const;
  /// Throws InvalidInput unless images align with the sampling, all have
  /// length m, and every entry is finite.
  void validate() const;
};

/// Evaluates `field` on every sample point.
SampledMap sample_map(const VectorField& field, const BoundarySampling& sampling);

/// Grid location of the smallest value of a homotopy trace. `t` and `point`
/// are the interpolated location when the minimum sits inside a grid cell;
/// the indices name the nearest grid node.
struct GridWitness {
  std::size_t point_index = 0;
  std::size_t t_index = 0;
  double t = 0.0;
  Vec point;
};

/// H(x, t) sampled on base.points x t_grid. frames[k][i] = H(x_i, t_k).
struct HomotopyTrace {
  BoundarySampling base;
  std::vector<double> t_grid;
  std::vector<std::vector<Vec>> frames;
  double min_norm = 0.0;
  std::optional<GridWitness> witness;

  const std::vector<Vec>& first() const { return frames.front(); }
  const std::vector<Vec>& last() const { return frames.back(); }
  int codomain_dim() const;
};

struct TraceMinimum {
  double min_norm = 0.0;
  std::optional<GridWitness> witness;
};

/// Smallest norm of the trace. The result is the minimum over grid nodes,
/// except that it drops to exactly 0 when the piecewise-linear interpolant of
/// the grid provably passes through the origin: a sign change across a cell
/// edge for m = 1, or a grid triangle containing the origin for planar
/// (closed, m = 2) traces. Deterministic in the frames.
TraceMinimum trace_minimum(const BoundarySampling& base, std::span<const double> t_grid,
                           const std::vector<std::vector<Vec>>& frames);

/// Builds a trace and fills min_norm/witness via trace_minimum.
HomotopyTrace make_trace(BoundarySampling base, std::vector<double> t_grid,
                         std::vector<std::vector<Vec>> frames);

struct ValidityReport {
  bool valid = false;
  double min_norm = 0.0;
  std::optional<GridWitness> witness;
  Rigor rigor = Rigor::Heuristic;
  std::optional<double> lipschitz_bound;
  double threshold = 0.0;
};

/// sqrt(h^2 + dt_max^2): the largest diameter of a (point, t) grid cell.
double grid_diameter(const HomotopyTrace& trace);

/// valid iff min_norm > threshold; threshold is 0 without a Lipschitz bound
/// and L * grid_diameter / 2 with one.
ValidityReport assess(const HomotopyTrace& trace, std::optional<double> lipschitz = std::nullopt);

/// Uniform grid of `t_steps` values from 0 to 1 inclusive.
std::vector<double> uniform_t_grid(int t_steps);

/// H(x, t) = (1 - t) f(x) + t g(x).
std::pair<HomotopyTrace, ValidityReport> straight_line(const SampledMap& f, const SampledMap& g,
                                                       int t_steps,
                                                       std::optional<double> lipschitz = std::nullopt);

/// H(x, 1 - t).
HomotopyTrace reverse(const HomotopyTrace& trace);

/// Runs `first` on [0, 1/2] and `second` on [1/2, 1]. Both junction frames are
/// kept, so the grid has a repeated t = 1/2. Throws EndpointMismatch when
/// first.last() and second.first() differ by more than 1e-9.
HomotopyTrace concatenate(const HomotopyTrace& first, const HomotopyTrace& second);

/// A null-homotopy of a boundary map that is null-homotopic on the samples:
///   S^0 into R \ {0} with both values of one sign: straight line to their mean;
///   planar closed samplings into R^2 \ {0} with zero winding: log-polar
///   contraction exp((1-t) log|f| + t log c) * e^{i((1-t) arg f + t arg c)},
///   using the continuous lift of arg f along the samples.
/// Throws NotANullHomotopy when the samples show a nonzero obstruction.
HomotopyTrace null_homotopy(const SampledMap& f, int t_steps);

/// Zero-free extension of a boundary map to the whole disk, built from a
/// null-homotopy H with constant last frame c:
///   phi(x) = c                          for |y| <= 1/2,
///   phi(x) = H(y / |y|, 2 - 2 |y|)      otherwise,
/// where y is x rescaled to the unit disk. Between grid nodes H is
/// interpolated bilinearly in (boundary parameter, t) for planar samplings;
/// S^0 interpolates in t only; n >= 3 uses the nearest sample direction.
class RadialExtension {
 public:
  explicit RadialExtension(HomotopyTrace trace);

  Vec operator()(std::span<const double> x) const;
  VectorField as_field() const;

  const Vec& center_value() const noexcept { return center_value_; }
  const HomotopyTrace& trace() const noexcept { return trace_; }
  int dim() const noexcept { return trace_.base.region.dim(); }

 private:
  // Returns (index, next index, weight of next) along the boundary.
  struct Bracket {
    std::size_t lo;
    std::size_t hi;
    double weight;
  };
  Bracket locate_direction(std::span<const double> unit) const;
  Bracket locate_time(double t) const;

  HomotopyTrace trace_;
  Vec center_value_;
};

/// Throws NotANullHomotopy unless the last frame is constant (1e-9) and nonzero.
RadialExtension radial_extension(const HomotopyTrace& trace);

/// H(x, t) = phi(x0 + (1 - t)(x - x0)) on the sampling, ending at phi(x0).
std::pair<HomotopyTrace, ValidityReport> contraction_from_extension(
    const Evaluator& phi, const BoundarySampling& sampling, int t_steps);

}  // namespace zerocert
