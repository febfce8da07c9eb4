#include "zerocert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

void require_dim(std::span<const double> x, const Region& region) {
  if (static_cast<int>(x.size()) != region.dim()) {
    throw InvalidInput("point has dimension " + std::to_string(x.size()) +
                       " but region has dimension " + std::to_string(region.dim()));
  }
}

void require_disk(const Region& region) {
  if (!region.is_disk()) throw InvalidInput("operation requires a disk region");
}

// Unit directions of the deterministic low-discrepancy sampling of S^{n-1},
// n >= 3. n = 3 uses the Fibonacci spiral; higher dimensions push an R_d
// Kronecker sequence through Box-Muller and normalize.
std::vector<Vec> spiral_directions(int n, std::size_t count) {
  std::vector<Vec> dirs;
  dirs.reserve(count);
  if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * static_cast<double>(i);
      dirs.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return dirs;
  }

  const int d = 2 * ((n + 1) / 2);
  // phi_d solves x^{d+1} = x + 1.
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (d + 1));
  Vec alpha(d);
  for (int j = 0; j < d; ++j) alpha[j] = std::fmod(1.0 / std::pow(phi, j + 1), 1.0);

  constexpr double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < count; ++i) {
    Vec g(d);
    for (int j = 0; j < d; j += 2) {
      double u1 = std::fmod(0.5 + static_cast<double>(i + 1) * alpha[j], 1.0);
      double u2 = std::fmod(0.5 + static_cast<double>(i + 1) * alpha[j + 1], 1.0);
      u1 = std::max(u1, tiny);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      g[j] = radius * std::cos(2.0 * std::numbers::pi * u2);
      g[j + 1] = radius * std::sin(2.0 * std::numbers::pi * u2);
    }
    g.resize(n);
    const double len = norm(g);
    for (double& v : g) v /= len;
    dirs.push_back(std::move(g));
  }
  return dirs;
}

double max_nearest_neighbour_gap(const std::vector<Vec>& pts) {
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j) best = std::min(best, distance(pts[i], pts[j]));
    }
    if (std::isfinite(best)) worst = std::max(worst, best);
  }
  return worst;
}

BoundarySampling circle_sampling(const Region& disk, int level) {
  const std::size_t count = std::size_t{4} << level;
  BoundarySampling s{disk, {}, {}, 0.0, level, true, false};
  s.points.reserve(count);
  s.params.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(count);
    s.points.push_back(boundary_curve_point(disk, frac));
    s.params.push_back(frac);
  }
  s.h = 2.0 * disk.radius() * std::sin(std::numbers::pi / static_cast<double>(count));
  return s;
}

}  // namespace

Region Region::disk(Vec center, double radius) {
  if (center.empty()) throw InvalidInput("disk needs dimension n >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("disk radius must be positive");
  return Region(RegionKind::Disk, std::move(center), {}, radius);
}

Region Region::unit_disk(int n) {
  if (n < 1) throw InvalidInput("disk needs dimension n >= 1");
  return disk(Vec(static_cast<std::size_t>(n), 0.0), 1.0);
}

Region Region::box(Vec lower, Vec upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw InvalidInput("box corners must be nonempty and of equal dimension");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) throw InvalidInput("box requires lower < upper componentwise");
  }
  return Region(RegionKind::Box, std::move(lower), std::move(upper), 0.0);
}

const Vec& Region::center() const {
  require_disk(*this);
  return a_;
}

double Region::radius() const {
  require_disk(*this);
  return radius_;
}

const Vec& Region::lower() const {
  if (!is_box()) throw InvalidInput("operation requires a box region");
  return a_;
}

const Vec& Region::upper() const {
  if (!is_box()) throw InvalidInput("operation requires a box region");
  return b_;
}

double Region::diameter() const {
  return is_disk() ? 2.0 * radius_ : distance(a_, b_);
}

double Region::boundary_tolerance() const {
  double scale = radius_;
  if (is_box()) {
    for (std::size_t i = 0; i < a_.size(); ++i) scale = std::max(scale, 0.5 * (b_[i] - a_[i]));
  }
  return 1e-12 * std::max(1.0, scale);
}

bool Region::on_boundary(std::span<const double> x) const {
  require_dim(x, *this);
  const double tol = boundary_tolerance();
  if (is_disk()) return std::abs(distance(x, a_) - radius_) <= tol;
  bool touches = false;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (x[i] < a_[i] - tol || x[i] > b_[i] + tol) return false;
    if (std::abs(x[i] - a_[i]) <= tol || std::abs(x[i] - b_[i]) <= tol) touches = true;
  }
  return touches;
}

bool Region::contains(std::span<const double> x) const {
  require_dim(x, *this);
  const double tol = boundary_tolerance();
  if (is_disk()) return distance(x, a_) <= radius_ + tol;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (x[i] < a_[i] - tol || x[i] > b_[i] + tol) return false;
  }
  return true;
}

Vec rescale_to_unit(std::span<const double> x, const Region& disk) {
  require_disk(disk);
  require_dim(x, disk);
  Vec y(x.size());
  const double r = disk.radius();
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - disk.center()[i]) / r;
  return y;
}

Vec rescale_from_unit(std::span<const double> y, const Region& disk) {
  require_disk(disk);
  require_dim(y, disk);
  Vec x(y.size());
  const double r = disk.radius();
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = r * y[i] + disk.center()[i];
  return x;
}

Vec boundary_curve_point(const Region& region, double s) {
  if (region.dim() != 2) throw InvalidInput("boundary curves are defined for planar regions only");
  s -= std::floor(s);
  if (region.is_disk()) {
    const double theta = 2.0 * std::numbers::pi * s;
    const Vec unit{std::cos(theta), std::sin(theta)};
    return rescale_from_unit(unit, region);
  }
  const Vec& lo = region.lower();
  const Vec& hi = region.upper();
  const double w = hi[0] - lo[0];
  const double h = hi[1] - lo[1];
  double arc = s * 2.0 * (w + h);
  if (arc < w) return {lo[0] + arc, lo[1]};
  arc -= w;
  if (arc < h) return {hi[0], lo[1] + arc};
  arc -= h;
  if (arc < w) return {hi[0] - arc, hi[1]};
  arc -= w;
  return {lo[0], hi[1] - std::min(arc, h)};
}

BoundarySampling sample_sphere(int n, const Region& disk, int level) {
  require_disk(disk);
  if (n < 1) throw InvalidInput("sphere dimension requires n >= 1");
  if (n != disk.dim()) throw InvalidInput("sample_sphere: n does not match the disk dimension");
  if (level < 0) throw InvalidInput("sampling level must be >= 0");

  if (n == 1) {
    const double c = disk.center()[0];
    const double r = disk.radius();
    return BoundarySampling{disk, {{c - r}, {c + r}}, {}, 2.0 * r, level, false, false};
  }
  if (n == 2) {
    if (level > 24) throw InvalidInput("sampling level too large");
    return circle_sampling(disk, level);
  }

  if (level > 6) throw InvalidInput("sampling level too large for n >= 3");
  const std::size_t count = std::size_t{100} << (2 * level);
  BoundarySampling s{disk, {}, {}, 0.0, level, false, true};
  s.points.reserve(count);
  for (const Vec& dir : spiral_directions(n, count)) s.points.push_back(rescale_from_unit(dir, disk));
  s.h = 2.0 * max_nearest_neighbour_gap(s.points);
  return s;
}

BoundarySampling sample_box_boundary(const Region& box, int per_edge) {
  if (!box.is_box()) throw InvalidInput("sample_box_boundary requires a box region");
  if (per_edge < 1) throw InvalidInput("per_edge must be >= 1");
  if (box.dim() == 1) {
    return BoundarySampling{box, {{box.lower()[0]}, {box.upper()[0]}}, {},
                            box.upper()[0] - box.lower()[0], 0, false, false};
  }
  if (box.dim() != 2) throw InvalidInput("box perimeters are sampled for n <= 2 only");

  const Vec& lo = box.lower();
  const Vec& hi = box.upper();
  const double w = hi[0] - lo[0];
  const double h = hi[1] - lo[1];
  const double perimeter = 2.0 * (w + h);
  const Vec corners[4] = {{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
  const double lengths[4] = {w, h, w, h};

  BoundarySampling s{box, {}, {}, 0.0, 0, true, false};
  double offset = 0.0;
  for (int e = 0; e < 4; ++e) {
    const Vec& a = corners[e];
    const Vec& b = corners[(e + 1) % 4];
    for (int k = 0; k < per_edge; ++k) {
      const double f = static_cast<double>(k) / per_edge;
      s.points.push_back(k == 0 ? a : Vec{a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])});
      s.params.push_back((offset + f * lengths[e]) / perimeter);
    }
    offset += lengths[e];
  }
  s.h = max_adjacent_distance(s);
  return s;
}

BoundarySampling refine(const BoundarySampling& sampling) {
  const Region& region = sampling.region;
  if (region.is_disk() && region.dim() == 2 && sampling.closed) {
    const std::size_t count = sampling.points.size();
    BoundarySampling out{region, {}, {}, 0.0, sampling.level + 1, true, false};
    out.points.reserve(2 * count);
    out.params.reserve(2 * count);
    for (std::size_t k = 0; k < count; ++k) {
      const double a = sampling.params[k];
      double b = k + 1 < count ? sampling.params[k + 1] : sampling.params[0] + 1.0;
      const double mid = 0.5 * (a + b);
      out.points.push_back(sampling.points[k]);
      out.params.push_back(a);
      out.points.push_back(boundary_curve_point(region, mid));
      out.params.push_back(mid - std::floor(mid));
    }
    const bool uniform = sampling.h > 0.0 &&
        std::abs(sampling.h - 2.0 * region.radius() * std::sin(std::numbers::pi / count)) <=
            1e-12 * std::max(1.0, region.radius());
    out.h = uniform ? 2.0 * region.radius() * std::sin(std::numbers::pi / (2.0 * count))
                    : max_adjacent_distance(out);
    return out;
  }
  if (region.is_disk()) return sample_sphere(region.dim(), region, sampling.level + 1);

  const int per_edge = std::max<int>(1, static_cast<int>(sampling.points.size() / 4));
  BoundarySampling out = sample_box_boundary(region, 2 * per_edge);
  out.level = sampling.level + 1;
  return out;
}

double max_adjacent_distance(const BoundarySampling& sampling) {
  const auto& pts = sampling.points;
  if (pts.size() < 2) return 0.0;
  if (!sampling.closed && sampling.region.dim() >= 3) return 2.0 * max_nearest_neighbour_gap(pts);
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) worst = std::max(worst, distance(pts[k], pts[k + 1]));
  if (sampling.closed) worst = std::max(worst, distance(pts.back(), pts.front()));
  return worst;
}

}  // namespace zerocert
