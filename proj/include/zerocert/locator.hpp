#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zerocert/degree.hpp"
#include "zerocert/geometry.hpp"
#include "zerocert/vec.hpp"

namespace zerocert {

inline constexpr std::uint64_t kDefaultLocatorSeed = 0x7a65726fULL;

struct TrailStep {
  /// Sub-cell index: 0 lower-left, 1 lower-right, 2 upper-right, 3 upper-left.
  /// For n = 1, 0 is the lower half and 1 the upper half.
  int quadrant = 0;
  int jiggles = 0;
  /// Winding of the chosen sub-box (sign obstruction for n = 1).
  long winding = 0;
};

struct LocateResult {
  Vec point;
  /// |F(point)|, evaluated once more after the search.
  double residual = 0.0;
  double cell_diameter = 0.0;
  int iterations = 0;
  std::vector<TrailStep> trail;
};

struct LocateOptions {
  double eps_x = 1e-6;
  double eps_f = 1e-9;
  int max_iter = 200;
  int per_edge = 8;
  int refine_budget = kDefaultRefineBudget;
  std::uint64_t seed = kDefaultLocatorSeed;
  int max_jiggles = 5;
};

/// Winding of F along the counter-clockwise perimeter of a planar box.
WindingResult box_winding(const VectorField& field, const Region& box, int per_edge = 8,
                          int refine_budget = kDefaultRefineBudget);

/// The four sub-boxes of a planar box cut at `cut`, in TrailStep order.
std::array<Region, 4> split_box(const Region& box, const Vec& cut);

/// n = 1: bisection on a sign change. n = 2: quadtree descent into a sub-box
/// with nonzero winding, jiggling the cut point when a sub-box boundary comes
/// too close to a zero. Throws DegreeLost (parent cell) when no sub-box keeps
/// the degree and BudgetExhausted when max_iter runs out first.
LocateResult locate_zero(const VectorField& field, const Region& box, const LocateOptions& opts = {});

/// Fixed point of f: D^n -> D^n (n in {1, 2}) through G(x) = x - f(x).
/// The reported residual is |f(point) - point|. Throws InvalidInput when f
/// leaves the disk on the validation grid.
LocateResult brouwer_fixed_point(const VectorField& f, double eps = 1e-6,
                                 std::uint64_t seed = kDefaultLocatorSeed);

}  // namespace zerocert
