#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zerocert/vec.hpp"

namespace zerocert {

enum class RegionKind { Disk, Box };

/// Closed disk D^n_r(x0) or an axis-aligned box [lower, upper].
class Region {
 public:
  static Region disk(Vec center, double radius);
  static Region unit_disk(int n);
  static Region box(Vec lower, Vec upper);

  RegionKind kind() const noexcept { return kind_; }
  bool is_disk() const noexcept { return kind_ == RegionKind::Disk; }
  bool is_box() const noexcept { return kind_ == RegionKind::Box; }
  int dim() const noexcept { return static_cast<int>(a_.size()); }

  // Disk accessors.
  const Vec& center() const;
  double radius() const;

  // Box accessors.
  const Vec& lower() const;
  const Vec& upper() const;

  /// Euclidean diameter (2r for disks, the diagonal for boxes).
  double diameter() const;

  /// Absolute tolerance for boundary membership: 1e-12 * max(1, r). Boxes use
  /// the largest half-width in place of r.
  double boundary_tolerance() const;

  bool on_boundary(std::span<const double> x) const;
  bool contains(std::span<const double> x) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(RegionKind kind, Vec a, Vec b, double radius)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), radius_(radius) {}

  RegionKind kind_;
  Vec a_;  // center or lower corner
  Vec b_;  // upper corner (boxes only)
  double radius_ = 0.0;
};

/// Ordered samples on the boundary of a region.
///
/// For closed samplings (circles and box perimeters in the plane) `params`
/// holds each point's position along the boundary curve as a fraction of one
/// full traversal in [0, 1); the winding computation uses it to insert
/// midpoints. Open samplings (S^0 and S^{n-1}, n >= 3) leave it empty.
struct BoundarySampling {
  Region region;
  std::vector<Vec> points;
  std::vector<double> params;
  double h = 0.0;
  int level = 0;
  bool closed = false;
  bool h_is_estimate = false;

  std::size_t size() const noexcept { return points.size(); }
};

/// (x - x0) / r.
Vec rescale_to_unit(std::span<const double> x, const Region& disk);
/// r y + x0.
Vec rescale_from_unit(std::span<const double> y, const Region& disk);

/// Point on a planar closed boundary curve at fraction s of one counter-
/// clockwise traversal. Circles start at angle 0; box perimeters start at the
/// lower corner.
Vec boundary_curve_point(const Region& region, double s);

/// Samples S^{n-1}_r(x0):
///   n = 1: the two endpoints, h = 2r;
///   n = 2: 4 * 2^level equally spaced angles, h = 2 r sin(pi / N);
///   n >= 3: 100 * 4^level points of a deterministic spiral/lattice with h the
///           doubled empirical nearest-neighbour gap.
BoundarySampling sample_sphere(int n, const Region& disk, int level);

/// Counter-clockwise samples of a planar box perimeter: the four corners plus
/// `per_edge - 1` equally spaced interior points on each edge.
BoundarySampling sample_box_boundary(const Region& box, int per_edge);

/// Next refinement level. Planar circles get angular midpoints inserted
/// (the coarse points are kept verbatim); other samplings are regenerated at
/// level + 1.
BoundarySampling refine(const BoundarySampling& sampling);

/// Maximum Euclidean distance between consecutive samples (cyclic when
/// closed).
double max_adjacent_distance(const BoundarySampling& sampling);

}  // namespace zerocert
