#include "zerocert/homotopy.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <limits>
#include <numbers>

#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

constexpr double kEndpointTolerance = 1e-9;
constexpr double kSnap = 1e-12;

double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool segment_hits_origin_2d(const Vec& a, const Vec& b) {
  return cross2(a, b) == 0.0 && dot(a, b) <= 0.0;
}

bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

struct GridVertex {
  std::size_t i;     // point index (may equal size() for the cyclic wrap)
  std::size_t k;     // t index
  double weight;
};

class WitnessBuilder {
 public:
  WitnessBuilder(const BoundarySampling& base, std::span<const double> t_grid)
      : base_(base), t_grid_(t_grid) {}

  GridWitness build(std::span<const GridVertex> verts) const {
    const std::size_t count = base_.points.size();
    double param = 0.0;
    double t = 0.0;
    const GridVertex* heaviest = &verts[0];
    for (const GridVertex& v : verts) {
      t += v.weight * t_grid_[v.k];
      if (!base_.params.empty()) {
        const double p = v.i < count ? base_.params[v.i] : base_.params[0] + 1.0;
        param += v.weight * p;
      }
      if (v.weight > heaviest->weight) heaviest = &v;
    }
    GridWitness w;
    w.point_index = heaviest->i % count;
    w.t_index = heaviest->k;
    w.t = t;
    if (base_.closed && !base_.params.empty() && base_.region.dim() == 2) {
      w.point = boundary_curve_point(base_.region, param);
    } else {
      w.point = base_.points[w.point_index];
    }
    return w;
  }

 private:
  const BoundarySampling& base_;
  std::span<const double> t_grid_;
};

// Looks for a zero of the piecewise-linear interpolant across the edge a-b.
std::optional<std::array<GridVertex, 2>> edge_crossing(const Vec& a, const Vec& b, GridVertex va,
                                                       GridVertex vb) {
  if (a.size() == 1) {
    if (!opposite_signs(a[0], b[0])) return std::nullopt;
    const double s = std::abs(a[0]) / (std::abs(a[0]) + std::abs(b[0]));
    va.weight = 1.0 - s;
    vb.weight = s;
    return std::array<GridVertex, 2>{va, vb};
  }
  if (a.size() == 2 && segment_hits_origin_2d(a, b)) {
    const double na = norm(a);
    const double nb = norm(b);
    const double s = na + nb > 0.0 ? na / (na + nb) : 0.0;
    va.weight = 1.0 - s;
    vb.weight = s;
    return std::array<GridVertex, 2>{va, vb};
  }
  return std::nullopt;
}

// Planar triangle test with barycentric weights of the origin.
std::optional<std::array<double, 3>> triangle_contains_origin(const Vec& a, const Vec& b,
                                                               const Vec& c) {
  const double d1 = cross2(a, b);
  const double d2 = cross2(b, c);
  const double d3 = cross2(c, a);
  const double area2 = d1 + d2 + d3;
  if (area2 == 0.0) return std::nullopt;  // degenerate; edges are checked separately
  const bool inside = (d1 >= 0.0 && d2 >= 0.0 && d3 >= 0.0) || (d1 <= 0.0 && d2 <= 0.0 && d3 <= 0.0);
  if (!inside) return std::nullopt;
  return std::array<double, 3>{d2 / area2, d3 / area2, d1 / area2};
}

void require_same_base(const BoundarySampling& a, const BoundarySampling& b) {
  if (a.points.size() != b.points.size()) throw InvalidInput("samplings differ in size");
  const double tol = 1e-12 * std::max(1.0, a.region.diameter());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].size() != b.points[i].size() || max_abs_diff(a.points[i], b.points[i]) > tol) {
      throw InvalidInput("samplings differ at point " + std::to_string(i));
    }
  }
}

Vec base_center(const Region& region) {
  if (region.is_disk()) return region.center();
  Vec c(region.lower().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (region.lower()[i] + region.upper()[i]);
  return c;
}

}  // namespace

double SampledMap::min_norm() const {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& v : images) best = std::min(best, norm(v));
  return best;
}

void SampledMap::validate() const {
  if (images.size() != sampling.points.size()) {
    throw InvalidInput("sampled map has " + std::to_string(images.size()) + " images for " +
                       std::to_string(sampling.points.size()) + " points");
  }
  for (const Vec& v : images) {
    if (static_cast<int>(v.size()) != m) throw InvalidInput("image has wrong codomain dimension");
    for (double e : v) {
      if (!std::isfinite(e)) throw InvalidInput("sampled map has a non-finite image");
    }
  }
}

SampledMap sample_map(const VectorField& field, const BoundarySampling& sampling) {
  SampledMap out{sampling, {}, field.m};
  out.images.reserve(sampling.points.size());
  for (const Vec& x : sampling.points) out.images.push_back(field(x));
  out.validate();
  return out;
}

int HomotopyTrace::codomain_dim() const {
  return frames.empty() || frames.front().empty() ? 0 : static_cast<int>(frames.front().front().size());
}

TraceMinimum trace_minimum(const BoundarySampling& base, std::span<const double> t_grid,
                           const std::vector<std::vector<Vec>>& frames) {
  TraceMinimum out;
  out.min_norm = std::numeric_limits<double>::infinity();
  const std::size_t count = base.points.size();
  if (frames.empty() || count == 0) return out;

  WitnessBuilder builder(base, t_grid);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      const double v = norm(frames[k][i]);
      if (v < out.min_norm) {
        out.min_norm = v;
        const GridVertex node{i, k, 1.0};
        out.witness = builder.build(std::span(&node, 1));
      }
    }
  }
  if (out.min_norm == 0.0) return out;

  const std::size_t m = frames[0][0].size();
  const bool planar_closed = base.closed && base.region.dim() == 2 && count >= 2;
  auto report = [&](std::span<const GridVertex> verts) {
    out.min_norm = 0.0;
    out.witness = builder.build(verts);
  };

  // Edges along t for every point.
  for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto hit = edge_crossing(frames[k][i], frames[k + 1][i], {i, k, 0}, {i, k + 1, 0})) {
        report(*hit);
        return out;
      }
    }
  }
  if (!planar_closed) return out;

  // Edges along the boundary within each frame, then cell diagonals/triangles.
  for (std::size_t k = 0; k < frames.size(); ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = (i + 1) % count;
      if (auto hit = edge_crossing(frames[k][i], frames[k][j], {i, k, 0}, {i + 1, k, 0})) {
        report(*hit);
        return out;
      }
    }
  }
  if (m != 2) return out;
  for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = (i + 1) % count;
      const Vec& a = frames[k][i];
      const Vec& b = frames[k][j];
      const Vec& c = frames[k + 1][j];
      const Vec& d = frames[k + 1][i];
      if (auto hit = edge_crossing(a, c, {i, k, 0}, {i + 1, k + 1, 0})) {
        report(*hit);
        return out;
      }
      if (auto w = triangle_contains_origin(a, b, c)) {
        const GridVertex v[3] = {{i, k, (*w)[0]}, {i + 1, k, (*w)[1]}, {i + 1, k + 1, (*w)[2]}};
        report(v);
        return out;
      }
      if (auto w = triangle_contains_origin(a, c, d)) {
        const GridVertex v[3] = {{i, k, (*w)[0]}, {i + 1, k + 1, (*w)[1]}, {i, k + 1, (*w)[2]}};
        report(v);
        return out;
      }
    }
  }
  return out;
}

HomotopyTrace make_trace(BoundarySampling base, std::vector<double> t_grid,
                         std::vector<std::vector<Vec>> frames) {
  if (t_grid.size() != frames.size() || t_grid.size() < 2) {
    throw InvalidInput("homotopy trace needs at least two frames aligned with the t grid");
  }
  for (const auto& frame : frames) {
    if (frame.size() != base.points.size()) throw InvalidInput("frame size does not match sampling");
  }
  HomotopyTrace trace{std::move(base), std::move(t_grid), std::move(frames), 0.0, std::nullopt};
  TraceMinimum tm = trace_minimum(trace.base, trace.t_grid, trace.frames);
  trace.min_norm = tm.min_norm;
  trace.witness = std::move(tm.witness);
  return trace;
}

double grid_diameter(const HomotopyTrace& trace) {
  double dt = 0.0;
  for (std::size_t k = 0; k + 1 < trace.t_grid.size(); ++k) {
    dt = std::max(dt, trace.t_grid[k + 1] - trace.t_grid[k]);
  }
  return std::hypot(trace.base.h, dt);
}

ValidityReport assess(const HomotopyTrace& trace, std::optional<double> lipschitz) {
  ValidityReport r;
  r.min_norm = trace.min_norm;
  r.witness = trace.witness;
  r.lipschitz_bound = lipschitz;
  if (lipschitz) {
    if (!(*lipschitz >= 0.0)) throw InvalidInput("Lipschitz bound must be nonnegative");
    r.rigor = Rigor::Rigorous;
    r.threshold = *lipschitz * grid_diameter(trace) / 2.0;
  }
  r.valid = r.min_norm > r.threshold;
  return r;
}

std::vector<double> uniform_t_grid(int t_steps) {
  if (t_steps < 2) throw InvalidInput("t_steps must be >= 2");
  std::vector<double> t(static_cast<std::size_t>(t_steps));
  for (int k = 0; k < t_steps; ++k) t[k] = static_cast<double>(k) / (t_steps - 1);
  t.back() = 1.0;
  return t;
}

std::pair<HomotopyTrace, ValidityReport> straight_line(const SampledMap& f, const SampledMap& g,
                                                       int t_steps, std::optional<double> lipschitz) {
  f.validate();
  g.validate();
  if (f.m != g.m) throw InvalidInput("straight_line: codomain dimensions differ");
  require_same_base(f.sampling, g.sampling);

  std::vector<double> t = uniform_t_grid(t_steps);
  std::vector<std::vector<Vec>> frames(t.size());
  frames.front() = f.images;
  frames.back() = g.images;
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    frames[k].reserve(f.images.size());
    for (std::size_t i = 0; i < f.images.size(); ++i) {
      frames[k].push_back(axpby(1.0 - t[k], f.images[i], t[k], g.images[i]));
    }
  }
  HomotopyTrace trace = make_trace(f.sampling, std::move(t), std::move(frames));
  ValidityReport report = assess(trace, lipschitz);
  return {std::move(trace), std::move(report)};
}

HomotopyTrace reverse(const HomotopyTrace& trace) {
  std::vector<double> t(trace.t_grid.rbegin(), trace.t_grid.rend());
  for (double& v : t) v = 1.0 - v;
  std::vector<std::vector<Vec>> frames(trace.frames.rbegin(), trace.frames.rend());
  return make_trace(trace.base, std::move(t), std::move(frames));
}

HomotopyTrace concatenate(const HomotopyTrace& first, const HomotopyTrace& second) {
  require_same_base(first.base, second.base);
  double dev = 0.0;
  for (std::size_t i = 0; i < first.last().size(); ++i) {
    if (first.last()[i].size() != second.first()[i].size()) throw EndpointMismatch(INFINITY);
    dev = std::max(dev, max_abs_diff(first.last()[i], second.first()[i]));
  }
  if (dev > kEndpointTolerance) throw EndpointMismatch(dev);

  std::vector<double> t;
  std::vector<std::vector<Vec>> frames;
  t.reserve(first.t_grid.size() + second.t_grid.size());
  frames.reserve(t.capacity());
  for (std::size_t k = 0; k < first.t_grid.size(); ++k) {
    t.push_back(0.5 * first.t_grid[k]);
    frames.push_back(first.frames[k]);
  }
  for (std::size_t k = 0; k < second.t_grid.size(); ++k) {
    t.push_back(0.5 + 0.5 * second.t_grid[k]);
    frames.push_back(second.frames[k]);
  }
  return make_trace(first.base, std::move(t), std::move(frames));
}

HomotopyTrace null_homotopy(const SampledMap& f, int t_steps) {
  f.validate();
  std::vector<double> t = uniform_t_grid(t_steps);
  const std::size_t count = f.images.size();
  if (count == 0) throw InvalidInput("null_homotopy: empty sampling");
  std::vector<std::vector<Vec>> frames(t.size());

  if (f.m == 1 && f.sampling.region.dim() == 1) {
    const double a = f.images.front()[0];
    const double b = f.images.back()[0];
    if (!(a * b > 0.0)) throw NotANullHomotopy("boundary values of S^0 map lie in different components");
    const Vec c{0.5 * (a + b)};
    for (std::size_t k = 0; k < t.size(); ++k) {
      for (const Vec& img : f.images) frames[k].push_back(axpby(1.0 - t[k], img, t[k], c));
    }
  } else if (f.m == 2 && f.sampling.closed && f.sampling.region.dim() == 2) {
    std::vector<double> log_r(count);
    std::vector<double> theta(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double r = norm(f.images[i]);
      if (r == 0.0) throw VanishingOnBoundary(i, f.sampling.points[i]);
      log_r[i] = std::log(r);
      if (i == 0) {
        theta[i] = std::atan2(f.images[i][1], f.images[i][0]);
      } else {
        const Vec& a = f.images[i - 1];
        const Vec& b = f.images[i];
        theta[i] = theta[i - 1] + std::atan2(cross2(a, b), dot(a, b));
      }
    }
    const Vec& a = f.images.back();
    const Vec& b = f.images.front();
    const double closing = theta.back() + std::atan2(cross2(a, b), dot(a, b)) - theta.front();
    if (std::abs(closing) > 0.05 * 2.0 * std::numbers::pi) {
      throw NotANullHomotopy("sampled boundary map has nonzero winding");
    }
    double mean_log = 0.0;
    double mean_theta = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      mean_log += log_r[i];
      mean_theta += theta[i];
    }
    mean_log /= static_cast<double>(count);
    mean_theta /= static_cast<double>(count);
    for (std::size_t k = 0; k < t.size(); ++k) {
      frames[k].reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        if (k == 0) {
          frames[k].push_back(f.images[i]);
          continue;
        }
        const double s = t[k];
        const double rad = std::exp((1.0 - s) * log_r[i] + s * mean_log);
        const double ang = (1.0 - s) * theta[i] + s * mean_theta;
        frames[k].push_back({rad * std::cos(ang), rad * std::sin(ang)});
      }
    }
  } else {
    throw Unsupported(f.sampling.region.dim(), f.m);
  }
  return make_trace(f.sampling, std::move(t), std::move(frames));
}

RadialExtension::RadialExtension(HomotopyTrace trace) : trace_(std::move(trace)) {
  if (!trace_.base.region.is_disk()) throw InvalidInput("radial extension needs a disk sampling");
  if (trace_.frames.size() < 2) throw InvalidInput("radial extension needs at least two frames");
  const auto& last = trace_.last();
  center_value_ = last.front();
  double dev = 0.0;
  for (const Vec& v : last) dev = std::max(dev, max_abs_diff(v, center_value_));
  if (dev > kEndpointTolerance) {
    throw NotANullHomotopy("last frame is not constant (deviation " + std::to_string(dev) + ")");
  }
  if (!(norm(center_value_) > 0.0)) throw NotANullHomotopy("constant end value is zero");
}

RadialExtension::Bracket RadialExtension::locate_direction(std::span<const double> unit) const {
  const BoundarySampling& base = trace_.base;
  const std::size_t count = base.points.size();
  const int n = base.region.dim();
  if (n == 1) {
    const bool plus = unit[0] > 0.0;
    const std::size_t idx = (base.points[1][0] > base.points[0][0]) == plus ? 1 : 0;
    return {idx, idx, 0.0};
  }
  if (n == 2 && base.closed && !base.params.empty()) {
    double s = std::atan2(unit[1], unit[0]) / (2.0 * std::numbers::pi);
    s -= std::floor(s);
    // params are increasing from params[0]; shift s into [params[0], params[0] + 1).
    if (s < base.params[0]) s += 1.0;
    auto it = std::upper_bound(base.params.begin(), base.params.end(), s);
    const std::size_t lo = static_cast<std::size_t>(std::distance(base.params.begin(), it)) - 1;
    const std::size_t hi = (lo + 1) % count;
    const double p_lo = base.params[lo];
    const double p_hi = lo + 1 < count ? base.params[lo + 1] : base.params[0] + 1.0;
    double w = (s - p_lo) / (p_hi - p_lo);
    if (w <= kSnap) return {lo, lo, 0.0};
    if (w >= 1.0 - kSnap) return {hi, hi, 0.0};
    return {lo, hi, w};
  }
  std::size_t best = 0;
  double best_dot = -INFINITY;
  const Vec& center = base.region.center();
  const double r = base.region.radius();
  for (std::size_t i = 0; i < count; ++i) {
    double d = 0.0;
    for (int j = 0; j < n; ++j) d += unit[j] * (base.points[i][j] - center[j]) / r;
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return {best, best, 0.0};
}

RadialExtension::Bracket RadialExtension::locate_time(double t) const {
  const auto& grid = trace_.t_grid;
  t = std::clamp(t, 0.0, 1.0);
  if (t <= grid.front() + kSnap) return {0, 0, 0.0};
  if (t >= grid.back() - kSnap) return {grid.size() - 1, grid.size() - 1, 0.0};
  auto it = std::upper_bound(grid.begin(), grid.end(), t);
  const std::size_t hi = static_cast<std::size_t>(std::distance(grid.begin(), it));
  const std::size_t lo = hi - 1;
  const double span = grid[hi] - grid[lo];
  const double w = span > 0.0 ? (t - grid[lo]) / span : 0.0;
  if (w <= kSnap) return {lo, lo, 0.0};
  if (w >= 1.0 - kSnap) return {hi, hi, 0.0};
  return {lo, hi, w};
}

Vec RadialExtension::operator()(std::span<const double> x) const {
  const Region& region = trace_.base.region;
  const Vec y = rescale_to_unit(x, region);
  const double rho = norm(y);
  if (rho <= 0.5) return center_value_;

  Vec unit(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) unit[i] = y[i] / rho;
  const Bracket p = locate_direction(unit);
  const Bracket t = locate_time(2.0 - 2.0 * rho);
  const auto& F = trace_.frames;
  if (p.weight == 0.0 && t.weight == 0.0) return F[t.lo][p.lo];

  const std::size_t m = center_value_.size();
  Vec out(m, 0.0);
  const double wp = p.weight;
  const double wt = t.weight;
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = (1.0 - wp) * (1.0 - wt) * F[t.lo][p.lo][j] + wp * (1.0 - wt) * F[t.lo][p.hi][j] +
             (1.0 - wp) * wt * F[t.hi][p.lo][j] + wp * wt * F[t.hi][p.hi][j];
  }
  return out;
}

VectorField RadialExtension::as_field() const {
  auto self = std::make_shared<const RadialExtension>(*this);
  return VectorField{dim(), static_cast<int>(center_value_.size()),
                     [self](std::span<const double> x) { return (*self)(x); }};
}

RadialExtension radial_extension(const HomotopyTrace& trace) { return RadialExtension(trace); }

std::pair<HomotopyTrace, ValidityReport> contraction_from_extension(
    const Evaluator& phi, const BoundarySampling& sampling, int t_steps) {
  std::vector<double> t = uniform_t_grid(t_steps);
  const Vec center = base_center(sampling.region);
  std::vector<std::vector<Vec>> frames(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    frames[k].reserve(sampling.points.size());
    for (const Vec& x : sampling.points) {
      if (k + 1 == t.size()) {
        frames[k].push_back(phi(center));
      } else {
        frames[k].push_back(phi(axpby(1.0 - t[k], x, t[k], center)));
      }
    }
  }
  HomotopyTrace trace = make_trace(sampling, std::move(t), std::move(frames));
  ValidityReport report = assess(trace);
  return {std::move(trace), std::move(report)};
}

}  // namespace zerocert
