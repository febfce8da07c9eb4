#include "zerocert/locator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "zerocert/criteria.hpp"
#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

Vec box_center(const Region& box) {
  Vec c(box.lower().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (box.lower()[i] + box.upper()[i]);
  return c;
}

LocateResult finish(const VectorField& field, Vec point, double cell_diameter, int iterations,
                    std::vector<TrailStep> trail) {
  LocateResult r;
  r.residual = norm(field(point));
  r.point = std::move(point);
  r.cell_diameter = cell_diameter;
  r.iterations = iterations;
  r.trail = std::move(trail);
  return r;
}

void require_box(const VectorField& field, const Region& box, int n) {
  if (!box.is_box()) throw InvalidInput("locate_zero needs a box region");
  if (field.n != n || field.m != n || box.dim() != n) {
    throw InvalidInput("locate_zero needs F: R^n -> R^n on an n-dimensional box");
  }
}

LocateResult bisect(const VectorField& field, const Region& box, const LocateOptions& opts) {
  double a = box.lower()[0];
  double b = box.upper()[0];
  const auto eval = [&](double s) { return field(Vec{s})[0]; };
  double fa = eval(a);
  double fb = eval(b);
  std::vector<TrailStep> trail;
  if (std::abs(fa) <= opts.eps_f) return finish(field, {a}, b - a, 0, trail);
  if (std::abs(fb) <= opts.eps_f) return finish(field, {b}, b - a, 0, trail);
  if ((fa > 0.0) == (fb > 0.0)) throw DegreeLost({a}, {b});

  for (int iter = 0;; ++iter) {
    const double mid = 0.5 * (a + b);
    if (b - a <= opts.eps_x || mid <= a || mid >= b) return finish(field, {mid}, b - a, iter, trail);
    const double fm = eval(mid);
    if (std::abs(fm) <= opts.eps_f) return finish(field, {mid}, b - a, iter, trail);
    if (iter >= opts.max_iter) throw BudgetExhausted("bisection hit max_iter");
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
      trail.push_back({1, 0, fb > 0.0 ? 1 : -1});
    } else {
      b = mid;
      fb = fm;
      trail.push_back({0, 0, fb > 0.0 ? 1 : -1});
    }
  }
}

struct SubBoxOutcome {
  std::optional<long> winding;
  // Sample close enough to a zero to be returned directly.
  std::optional<Vec> hit;
  bool unusable = false;
};

SubBoxOutcome probe(const VectorField& field, const Region& sub, const LocateOptions& opts) {
  SubBoxOutcome out;
  const SampledMap sampled = sample_map(field, sample_box_boundary(sub, opts.per_edge));
  double sup = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < sampled.images.size(); ++i) {
    const double v = norm(sampled.images[i]);
    sup = std::max(sup, v);
    if (v < lo) {
      lo = v;
      argmin = i;
    }
  }
  if (lo <= opts.eps_f) {
    out.hit = sampled.sampling.points[argmin];
    return out;
  }
  if (lo <= zero_tolerance(sup)) {
    out.unusable = true;
    return out;
  }
  try {
    out.winding = winding_number(sampled, field, opts.refine_budget).value;
  } catch (const VanishingOnBoundary&) {
    out.unusable = true;
  } catch (const BudgetExhausted&) {
    out.unusable = true;
  }
  return out;
}

LocateResult quadtree(const VectorField& field, const Region& box, const LocateOptions& opts) {
  std::vector<TrailStep> trail;
  {
    const SubBoxOutcome first = probe(field, box, opts);
    if (first.hit) return finish(field, *first.hit, box.diameter(), 0, trail);
    if (first.unusable || !first.winding || *first.winding == 0) {
      throw DegreeLost(box.lower(), box.upper());
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> offset(-0.1, 0.1);
  Region cell = box;
  for (int iter = 0;; ++iter) {
    const Vec center = box_center(cell);
    if (cell.diameter() <= opts.eps_x || norm(field(center)) <= opts.eps_f) {
      return finish(field, center, cell.diameter(), iter, trail);
    }
    if (iter >= opts.max_iter) throw BudgetExhausted("quadtree descent hit max_iter");

    std::optional<Region> chosen;
    for (int attempt = 0; attempt <= opts.max_jiggles && !chosen; ++attempt) {
      Vec cut = center;
      if (attempt > 0) {
        for (std::size_t i = 0; i < cut.size(); ++i) {
          cut[i] += offset(rng) * (cell.upper()[i] - cell.lower()[i]);
        }
      }
      const auto subs = split_box(cell, cut);
      for (int q = 0; q < 4; ++q) {
        const SubBoxOutcome o = probe(field, subs[q], opts);
        if (o.hit) {
          trail.push_back({q, attempt, 0});
          return finish(field, *o.hit, subs[q].diameter(), iter + 1, trail);
        }
        if (o.unusable) break;
        if (*o.winding != 0) {
          trail.push_back({q, attempt, *o.winding});
          chosen = subs[q];
          break;
        }
      }
    }
    if (!chosen) throw DegreeLost(cell.lower(), cell.upper());
    cell = *chosen;
  }
}

}  // namespace

WindingResult box_winding(const VectorField& field, const Region& box, int per_edge,
                          int refine_budget) {
  return winding_on_boundary(field, sample_box_boundary(box, per_edge), refine_budget);
}

std::array<Region, 4> split_box(const Region& box, const Vec& cut) {
  if (!box.is_box() || box.dim() != 2) throw InvalidInput("split_box needs a planar box");
  const Vec& lo = box.lower();
  const Vec& hi = box.upper();
  if (cut.size() != 2 || !(cut[0] > lo[0] && cut[0] < hi[0] && cut[1] > lo[1] && cut[1] < hi[1])) {
    throw InvalidInput("cut point must lie strictly inside the box");
  }
  return {Region::box({lo[0], lo[1]}, {cut[0], cut[1]}),
          Region::box({cut[0], lo[1]}, {hi[0], cut[1]}),
          Region::box({cut[0], cut[1]}, {hi[0], hi[1]}),
          Region::box({lo[0], cut[1]}, {cut[0], hi[1]})};
}

LocateResult locate_zero(const VectorField& field, const Region& box, const LocateOptions& opts) {
  if (!(opts.eps_x > 0.0) || !(opts.eps_f >= 0.0) || opts.max_iter < 1 || opts.per_edge < 1 ||
      opts.max_jiggles < 0) {
    throw InvalidInput("locate_zero: invalid tolerances or limits");
  }
  if (field.n == 1) {
    require_box(field, box, 1);
    return bisect(field, box, opts);
  }
  if (field.n == 2) {
    require_box(field, box, 2);
    return quadtree(field, box, opts);
  }
  throw Unsupported(field.n, field.m);
}

LocateResult brouwer_fixed_point(const VectorField& f, double eps, std::uint64_t seed) {
  const int n = f.n;
  if (n != 1 && n != 2) throw Unsupported(f.n, f.m);
  if (f.m != n) throw InvalidInput("brouwer_fixed_point needs f: R^n -> R^n");
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");

  const auto check_inside = [&](const Vec& x) {
    const Vec y = f(x);
    if (!(norm(y) <= 1.0 + 1e-9)) {
      throw InvalidInput("f maps a point of the unit disk outside it (|f(x)| = " +
                         std::to_string(norm(y)) + ")");
    }
  };
  if (n == 1) {
    for (int i = 0; i <= 200; ++i) check_inside({-1.0 + i / 100.0});
  } else {
    for (int i = 0; i <= 10; ++i) {
      for (int k = 0; k < 64; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 64.0;
        check_inside({0.1 * i * std::cos(a), 0.1 * i * std::sin(a)});
        if (i == 0) break;
      }
    }
  }

  VectorField g{n, n, [f](std::span<const double> x) {
                  Vec y = f(x);
                  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] - y[i];
                  return y;
                }};

  const Region disk = Region::unit_disk(n);
  const SampledMap boundary = sample_map(g, sample_sphere(n, disk, 3));
  double sup = 0.0;
  for (const Vec& y : boundary.images) sup = std::max(sup, norm(y));
  for (std::size_t i = 0; i < boundary.images.size(); ++i) {
    if (norm(boundary.images[i]) <= zero_tolerance(sup)) {
      return finish(g, boundary.sampling.points[i], 0.0, 0, {});
    }
  }

  const Certificate cert = certify_existence(g, disk);
  if (cert.verdict != Verdict::ZeroGuaranteed) {
    throw DegreeLost(Vec(n, -1.0), Vec(n, 1.0));
  }

  LocateOptions opts;
  opts.eps_x = eps;
  opts.eps_f = eps * 1e-3;
  opts.seed = seed;
  return locate_zero(g, Region::box(Vec(n, -1.0), Vec(n, 1.0)), opts);
}

}  // namespace zerocert
