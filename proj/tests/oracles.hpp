// Independent reference computations. Nothing here calls into the library.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace oracle {

using Planar = std::function<std::array<double, 2>(double, double)>;

inline constexpr int kBruteSamples = 1 << 16;

// Plain angle sum over 2^16 equally spaced points of the circle.
inline long brute_winding(const Planar& f, double cx = 0.0, double cy = 0.0, double r = 1.0,
                          int samples = kBruteSamples) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto at = [&](int k) {
    const double a = two_pi * k / samples;
    return f(cx + r * std::cos(a), cy + r * std::sin(a));
  };
  std::array<double, 2> prev = at(0);
  double total = 0.0;
  for (int k = 1; k <= samples; ++k) {
    const std::array<double, 2> cur = at(k % samples);
    total += std::atan2(prev[0] * cur[1] - prev[1] * cur[0], prev[0] * cur[0] + prev[1] * cur[1]);
    prev = cur;
  }
  return std::lround(total / two_pi);
}

// Dense minimum of |f| on a circle.
inline double dense_min_norm(const Planar& f, double cx = 0.0, double cy = 0.0, double r = 1.0,
                             int samples = kBruteSamples) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    const auto y = f(cx + r * std::cos(a), cy + r * std::sin(a));
    best = std::min(best, std::hypot(y[0], y[1]));
  }
  return best;
}

// Dense minimum of |f/|f| + x/|x|| on the unit circle.
inline double dense_opposite_margin(const Planar& f, int samples = kBruteSamples) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    const double c = std::cos(a), s = std::sin(a);
    const auto y = f(c, s);
    const double len = std::hypot(y[0], y[1]);
    best = std::min(best, std::hypot(y[0] / len + c, y[1] / len + s));
  }
  return best;
}

// Dense minimum of <f(x), x> on a circle of radius r about the origin.
inline double dense_min_inner(const Planar& f, double r, int samples = kBruteSamples) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * std::numbers::pi * k / samples;
    const double x = r * std::cos(a), y = r * std::sin(a);
    const auto v = f(x, y);
    best = std::min(best, v[0] * x + v[1] * y);
  }
  return best;
}

// Plain bisection to machine resolution.
inline double bisect_root(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Minimum of |(1-t) f(x) + t g(x)| over a dense (x, t) grid on the unit circle.
inline double dense_straight_line_min(const Planar& f, const Planar& g, int xs = 4096, int ts = 4096) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < xs; ++k) {
    const double a = 2.0 * std::numbers::pi * k / xs;
    const auto p = f(std::cos(a), std::sin(a));
    const auto q = g(std::cos(a), std::sin(a));
    for (int j = 0; j <= ts; ++j) {
      const double t = static_cast<double>(j) / ts;
      best = std::min(best, std::hypot((1 - t) * p[0] + t * q[0], (1 - t) * p[1] + t * q[1]));
    }
  }
  return best;
}

}  // namespace oracle
