#include "zerocert/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

struct Node {
  double param;
  Vec point;
  Vec image;
};

double step_angle(const Vec& a, const Vec& b) {
  return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
}

void require_planar_loop(const SampledMap& f) {
  f.validate();
  const BoundarySampling& s = f.sampling;
  if (f.m != 2 || s.region.dim() != 2 || !s.closed) {
    throw InvalidInput("winding number needs a closed planar sampling mapped into R^2");
  }
  if (s.params.size() != s.points.size() || s.points.size() < 2) {
    throw InvalidInput("winding number needs curve parameters for every sample");
  }
}

WindingResult adaptive_winding(const SampledMap& f, const VectorField* field, int refine_budget,
                               std::optional<double> lipschitz) {
  require_planar_loop(f);
  const BoundarySampling& s = f.sampling;
  const std::size_t count = s.points.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (norm(f.images[i]) == 0.0) throw VanishingOnBoundary(i, s.points[i]);
  }

  WindingResult out;
  out.min_norm = f.min_norm();
  double total = 0.0;
  bool unresolved = false;
  const int budget = field ? std::max(0, refine_budget) : 0;

  std::vector<std::pair<Node, Node>> stack;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = (i + 1) % count;
    const double pa = s.params[i];
    const double pb = j == 0 ? s.params[0] + 1.0 : s.params[j];
    stack.push_back({Node{pa, s.points[i], f.images[i]}, Node{pb, s.points[j], f.images[j]}});

    while (!stack.empty()) {
      auto [a, b] = std::move(stack.back());
      stack.pop_back();
      const double delta = step_angle(a.image, b.image);
      if (std::abs(delta) < kMaxStepAngle) {
        total += delta;
        out.max_step_angle = std::max(out.max_step_angle, std::abs(delta));
        out.h = std::max(out.h, distance(a.point, b.point));
        continue;
      }
      const double mid = 0.5 * (a.param + b.param);
      if (out.total_refinements >= budget || mid <= a.param || mid >= b.param) {
        unresolved = true;
        total += delta;
        out.max_step_angle = std::max(out.max_step_angle, std::abs(delta));
        out.h = std::max(out.h, distance(a.point, b.point));
        continue;
      }
      ++out.total_refinements;
      Node m{mid, boundary_curve_point(s.region, mid), {}};
      m.image = (*field)(m.point);
      if (m.image.size() != 2) throw InvalidInput("evaluator returned a non-planar image");
      const double mn = norm(m.image);
      if (!std::isfinite(mn)) throw InvalidInput("evaluator returned a non-finite image");
      if (mn == 0.0) throw VanishingOnBoundary(i, m.point);
      out.min_norm = std::min(out.min_norm, mn);
      stack.push_back({m, b});
      stack.push_back({std::move(a), std::move(m)});
    }
  }

  const double turns = total / (2.0 * std::numbers::pi);
  out.value = std::lround(turns);
  out.residual = turns - static_cast<double>(out.value);
  if (unresolved) {
    throw BudgetExhausted("winding refinement budget exhausted with steps >= pi/2 remaining",
                          out.value);
  }
  const bool bound_holds = lipschitz && out.min_norm > *lipschitz * out.h / 2.0;
  out.rigor = (bound_holds && std::abs(out.residual) < kWindingResidualTolerance)
                  ? Rigor::Rigorous
                  : Rigor::Heuristic;
  return out;
}

}  // namespace

WindingResult winding_number(const SampledMap& f, const VectorField& field, int refine_budget,
                             std::optional<double> lipschitz) {
  return adaptive_winding(f, &field, refine_budget, lipschitz);
}

WindingResult winding_number(const SampledMap& f, std::optional<double> lipschitz) {
  return adaptive_winding(f, nullptr, 0, lipschitz);
}

WindingResult winding_on_boundary(const VectorField& field, const BoundarySampling& sampling,
                                  int refine_budget, std::optional<double> lipschitz) {
  return winding_number(sample_map(field, sampling), field, refine_budget, lipschitz);
}

int sign_obstruction(const SampledMap& f) {
  f.validate();
  if (f.m != 1 || f.sampling.region.dim() != 1 || f.images.size() != 2) {
    throw InvalidInput("sign obstruction needs two samples of a map S^0 -> R");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (f.images[i][0] == 0.0) throw VanishingOnBoundary(i, f.sampling.points[i]);
  }
  const std::size_t upper = f.sampling.points[1][0] > f.sampling.points[0][0] ? 1 : 0;
  const double hi = f.images[upper][0];
  const double lo = f.images[1 - upper][0];
  if ((hi > 0.0) == (lo > 0.0)) return 0;
  return hi > 0.0 ? 1 : -1;
}

const char* to_string(CatReason reason) {
  switch (reason) {
    case CatReason::WindingNonzero: return "winding_nonzero";
    case CatReason::SignChange: return "sign_change";
    case CatReason::CodomainDimExcess: return "codomain_dim_excess";
    case CatReason::WindingZero: return "winding_zero";
    case CatReason::SameComponent: return "same_component";
  }
  return "unknown";
}

CatReason cat_reason_from_string(const std::string& s) {
  for (CatReason r : {CatReason::WindingNonzero, CatReason::SignChange, CatReason::CodomainDimExcess,
                      CatReason::WindingZero, CatReason::SameComponent}) {
    if (s == to_string(r)) return r;
  }
  throw InvalidInput("unknown cat reason '" + s + "'");
}

CatResult classify_cat(const SampledMap& f, int n, int m, const CatOptions& opts) {
  f.validate();
  if (f.m != m || f.sampling.region.dim() != n) throw InvalidInput("classify_cat: dimension mismatch");
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    if (norm(f.images[i]) == 0.0) throw VanishingOnBoundary(i, f.sampling.points[i]);
  }

  CatResult out;
  if (n < m) {
    out.cat = 1;
    out.reason = CatReason::CodomainDimExcess;
    return out;
  }
  if (n == 1 && m == 1) {
    out.sign = sign_obstruction(f);
    out.cat = *out.sign != 0 ? 2 : 1;
    out.reason = *out.sign != 0 ? CatReason::SignChange : CatReason::SameComponent;
    return out;
  }
  if (n == 2 && m == 2) {
    out.winding = opts.field ? winding_number(f, *opts.field, opts.refine_budget, opts.lipschitz)
                             : winding_number(f, opts.lipschitz);
    out.cat = out.winding->value != 0 ? 2 : 1;
    out.reason = out.winding->value != 0 ? CatReason::WindingNonzero : CatReason::WindingZero;
    return out;
  }
  throw Unsupported(n, m);
}

}  // namespace zerocert
