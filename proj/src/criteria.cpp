#include "zerocert/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

struct BoundaryData {
  SampledMap map;
  double sup_norm = 0.0;
  double min_norm = 0.0;
  std::size_t argmin = 0;
};

void require_field_on_disk(const VectorField& field, const Region& disk) {
  if (!disk.is_disk()) throw InvalidInput("certification requires a disk region");
  if (field.n != disk.dim()) {
    throw InvalidInput("map has n=" + std::to_string(field.n) + " but region has dimension " +
                       std::to_string(disk.dim()));
  }
}

BoundaryData sample_boundary(const VectorField& field, const Region& disk, int level) {
  require_field_on_disk(field, disk);
  BoundaryData d{sample_map(field, sample_sphere(disk.dim(), disk, level))};
  d.min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.map.images.size(); ++i) {
    const double v = norm(d.map.images[i]);
    d.sup_norm = std::max(d.sup_norm, v);
    if (v < d.min_norm) {
      d.min_norm = v;
      d.argmin = i;
    }
  }
  return d;
}

Rigor rigor_for(std::optional<double> lipschitz) {
  return lipschitz ? Rigor::Rigorous : Rigor::Heuristic;
}

CheckResult nonvanishing_from(const BoundaryData& d, std::optional<double> lipschitz) {
  CheckResult r;
  r.check = "boundary_nonvanishing";
  r.margin = d.min_norm;
  r.witness = d.map.sampling.points[d.argmin];
  r.rigor = rigor_for(lipschitz);
  r.threshold = lipschitz ? *lipschitz * d.map.sampling.h / 2.0 : 0.0;
  r.passed = r.margin > r.threshold;
  return r;
}

CheckResult poincare_bohl_from(const BoundaryData& d, std::optional<double> lipschitz) {
  const BoundarySampling& s = d.map.sampling;
  if (d.map.m != s.region.dim()) throw InvalidInput("Poincare-Bohl check needs m == n");
  const double tol = zero_tolerance(d.sup_norm);
  if (d.min_norm <= tol) throw VanishingOnBoundary(d.argmin, s.points[d.argmin]);

  CheckResult r;
  r.check = "poincare_bohl";
  r.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Vec& img = d.map.images[i];
    const Vec u = rescale_to_unit(s.points[i], s.region);
    const double len = norm(img);
    Vec sum(img.size());
    for (std::size_t j = 0; j < img.size(); ++j) sum[j] = img[j] / len + u[j];
    const double v = norm(sum);
    if (v < r.margin) {
      r.margin = v;
      r.witness = s.points[i];
    }
  }
  r.rigor = rigor_for(lipschitz);
  if (lipschitz) {
    const double unit_field_bound = 2.0 * *lipschitz / d.min_norm + 1.0 / s.region.radius();
    r.threshold = unit_field_bound * s.h / 2.0;
  }
  r.passed = r.margin > r.threshold;
  return r;
}

CheckResult obstruction_check(const char* name, long value, Rigor rigor) {
  CheckResult r;
  r.check = name;
  r.margin = static_cast<double>(std::labs(value));
  r.threshold = 0.0;
  r.passed = value != 0;
  r.rigor = rigor;
  return r;
}

void attach_extension(Certificate& cert, const SampledMap& f, int t_steps) {
  try {
    auto ext = std::make_shared<const RadialExtension>(null_homotopy(f, t_steps));
    cert.extension_witness = std::move(ext);
    cert.extension_witness_present = true;
  } catch (const Error&) {
    // The samples do not support an explicit contraction; leave the witness out.
  }
}

Rigor finalize_rigor(Certificate& cert, bool force_heuristic) {
  Rigor rigor = Rigor::Rigorous;
  for (CheckResult& c : cert.evidence) {
    if (force_heuristic) c.rigor = Rigor::Heuristic;
    rigor = weakest(rigor, c.rigor);
    if (c.check == "boundary_nonvanishing" && !c.passed) rigor = Rigor::Heuristic;
  }
  return rigor;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ZeroGuaranteed: return "ZeroGuaranteed";
    case Verdict::NoConclusion: return "NoConclusion";
    case Verdict::ZeroOnBoundary: return "ZeroOnBoundary";
  }
  return "unknown";
}

const char* to_string(Route r) {
  switch (r) {
    case Route::SignChange: return "sign_change";
    case Route::Winding: return "winding";
    case Route::PoincareBohl: return "poincare_bohl";
    case Route::CoerciveReduction: return "coercive_reduction";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::ZeroGuaranteed, Verdict::NoConclusion, Verdict::ZeroOnBoundary}) {
    if (s == to_string(v)) return v;
  }
  throw InvalidInput("unknown verdict '" + s + "'");
}

Route route_from_string(const std::string& s) {
  for (Route r : {Route::SignChange, Route::Winding, Route::PoincareBohl, Route::CoerciveReduction}) {
    if (s == to_string(r)) return r;
  }
  throw InvalidInput("unknown route '" + s + "'");
}

bool same_record(const Certificate& a, const Certificate& b) {
  return a.map_digest == b.map_digest && a.region == b.region && a.verdict == b.verdict &&
         a.route == b.route && a.obstruction == b.obstruction && a.reason == b.reason &&
         a.min_boundary_norm == b.min_boundary_norm && a.rigor == b.rigor &&
         a.evidence == b.evidence && a.extension_witness_present == b.extension_witness_present;
}

double zero_tolerance(double sup_norm) { return 1e-12 * (1.0 + sup_norm); }

CheckResult boundary_nonvanishing(const VectorField& field, const Region& disk, int level,
                                  std::optional<double> lipschitz) {
  return nonvanishing_from(sample_boundary(field, disk, level), lipschitz);
}

CheckResult poincare_bohl(const VectorField& field, const Region& disk, int level,
                          std::optional<double> lipschitz) {
  return poincare_bohl_from(sample_boundary(field, disk, level), lipschitz);
}

std::optional<std::pair<double, CheckResult>> coercivity_radius(const VectorField& field, int n,
                                                                std::span<const double> radii,
                                                                int level) {
  if (field.n != n || field.m != n) throw InvalidInput("coercivity_radius needs F: R^n -> R^n");
  double previous = 0.0;
  for (double radius : radii) {
    if (!(radius > previous)) throw InvalidInput("radii must be positive and ascending");
    previous = radius;
  }
  for (double radius : radii) {
    const Region disk = Region::disk(Vec(static_cast<std::size_t>(n), 0.0), radius);
    const BoundaryData d = sample_boundary(field, disk, level);
    if (d.min_norm <= zero_tolerance(d.sup_norm)) continue;

    CheckResult r;
    r.check = "coercivity";
    r.margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.map.images.size(); ++i) {
      const double v = dot(d.map.images[i], d.map.sampling.points[i]);
      if (v < r.margin) {
        r.margin = v;
        r.witness = d.map.sampling.points[i];
      }
    }
    r.passed = r.margin >= 0.0;
    if (r.passed) return std::make_pair(radius, r);
  }
  return std::nullopt;
}

Certificate certify_existence(const VectorField& field, const Region& disk,
                              const CertifyOptions& opts, std::string digest) {
  require_field_on_disk(field, disk);
  const int n = field.n;
  const int m = field.m;
  if (n > m) throw Unsupported(n, m);

  Certificate cert;
  cert.map_digest = std::move(digest);
  cert.region = disk;

  const BoundaryData d = sample_boundary(field, disk, opts.level);
  const CheckResult nv = nonvanishing_from(d, opts.lipschitz);
  cert.min_boundary_norm = nv.margin;
  cert.evidence.push_back(nv);

  if (nv.margin <= zero_tolerance(d.sup_norm)) {
    cert.verdict = Verdict::ZeroOnBoundary;
    cert.rigor = Rigor::Heuristic;
    for (CheckResult& c : cert.evidence) c.rigor = Rigor::Heuristic;
    return cert;
  }

  if (n < m) {
    cert.verdict = Verdict::NoConclusion;
    cert.reason = CatReason::CodomainDimExcess;
    cert.rigor = finalize_rigor(cert, opts.force_heuristic);
    return cert;
  }

  CatOptions cat_opts;
  cat_opts.field = &field;
  cat_opts.refine_budget = opts.refine_budget;
  cat_opts.lipschitz = opts.lipschitz;

  if (n == 1) {
    const CatResult cat = classify_cat(d.map, 1, 1, cat_opts);
    cert.obstruction = *cat.sign;
    cert.reason = cat.reason;
    cert.evidence.push_back(obstruction_check("sign_obstruction", *cat.sign, rigor_for(opts.lipschitz)));
    if (cat.cat == 2) {
      cert.verdict = Verdict::ZeroGuaranteed;
      cert.route = Route::SignChange;
    } else {
      cert.verdict = Verdict::NoConclusion;
      attach_extension(cert, d.map, opts.t_steps);
    }
    cert.rigor = finalize_rigor(cert, opts.force_heuristic);
    return cert;
  }

  if (n == 2) {
    try {
      const CatResult cat = classify_cat(d.map, 2, 2, cat_opts);
      cert.obstruction = cat.winding->value;
      cert.reason = cat.reason;
      cert.route = Route::Winding;
      cert.evidence.push_back(obstruction_check("winding", cat.winding->value, cat.winding->rigor));
      if (cat.cat == 2) {
        cert.verdict = Verdict::ZeroGuaranteed;
      } else {
        cert.verdict = Verdict::NoConclusion;
        attach_extension(cert, d.map, opts.t_steps);
      }
      cert.rigor = finalize_rigor(cert, opts.force_heuristic);
      return cert;
    } catch (const BudgetExhausted&) {
      // Fall through to the Poincare-Bohl route.
    }
  }

  const CheckResult pb = poincare_bohl_from(d, opts.lipschitz);
  cert.evidence.push_back(pb);
  if (pb.passed) {
    cert.verdict = Verdict::ZeroGuaranteed;
    cert.route = Route::PoincareBohl;
  } else {
    cert.verdict = Verdict::NoConclusion;
  }
  cert.rigor = finalize_rigor(cert, opts.force_heuristic);
  return cert;
}

Certificate certify_existence(const MapSpec& spec, const Region& disk, const CertifyOptions& opts) {
  return certify_existence(spec.field(), disk, opts, spec.digest);
}

Certificate certify_coercive(const VectorField& field, std::span<const double> radii,
                             const CertifyOptions& opts, std::string digest) {
  if (radii.empty()) throw InvalidInput("certify_coercive needs at least one radius");
  const int n = field.n;
  auto found = coercivity_radius(field, n, radii, opts.level);

  Certificate cert;
  cert.map_digest = std::move(digest);
  if (!found) {
    cert.region = Region::disk(Vec(static_cast<std::size_t>(n), 0.0), radii.back());
    cert.verdict = Verdict::NoConclusion;
    const BoundaryData d = sample_boundary(field, cert.region, opts.level);
    cert.min_boundary_norm = d.min_norm;
    cert.evidence.push_back(nonvanishing_from(d, opts.lipschitz));
    cert.rigor = Rigor::Heuristic;
    return cert;
  }

  const auto& [radius, coercive] = *found;
  cert.region = Region::disk(Vec(static_cast<std::size_t>(n), 0.0), radius);
  const BoundaryData d = sample_boundary(field, cert.region, opts.level);
  const CheckResult nv = nonvanishing_from(d, opts.lipschitz);
  cert.min_boundary_norm = nv.margin;
  cert.evidence.push_back(nv);
  cert.evidence.push_back(coercive);
  const CheckResult pb = poincare_bohl_from(d, opts.lipschitz);
  cert.evidence.push_back(pb);
  if (pb.passed) {
    cert.verdict = Verdict::ZeroGuaranteed;
    cert.route = Route::CoerciveReduction;
  } else {
    cert.verdict = Verdict::NoConclusion;
  }
  cert.rigor = finalize_rigor(cert, opts.force_heuristic);
  return cert;
}

}  // namespace zerocert
