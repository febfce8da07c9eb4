#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zerocert/criteria.hpp"
#include "zerocert/errors.hpp"

using namespace zerocert;

namespace {

VectorField affine(double a, double b, double c, double d, double e, double f) {
  return testing::planar(
      [=](double x, double y) { return std::array<double, 2>{a * x + b * y + e, c * x + d * y + f}; });
}

VectorField shift(double p, double q) { return affine(1, 0, 0, 1, p, q); }

const Region kUnit = Region::unit_disk(2);

}  // namespace

TEST_CASE("boundary_nonvanishing") {
  const CheckResult id = boundary_nonvanishing(shift(0, 0), kUnit, 3);
  CHECK(id.passed);
  CHECK(id.margin == doctest::Approx(1.0));
  CHECK(id.check == "boundary_nonvanishing");

  const CheckResult far = boundary_nonvanishing(shift(3, 3), kUnit, 3);
  CHECK(far.margin == doctest::Approx(3.0 * std::sqrt(2.0) - 1.0).epsilon(1e-4));
  CHECK(far.margin >= oracle::dense_min_norm([](double x, double y) {
          return std::array<double, 2>{x + 3, y + 3};
        }) - 1e-12);

  const CheckResult rigorous = boundary_nonvanishing(shift(0, 0), kUnit, 3, 1.0);
  CHECK(rigorous.rigor == Rigor::Rigorous);
  CHECK(rigorous.passed);
  CHECK(rigorous.threshold > 0.0);

  const CheckResult hit = boundary_nonvanishing(shift(-1, 0), kUnit, 3);
  CHECK(hit.margin == 0.0);
  CHECK_FALSE(hit.passed);
}

TEST_CASE("poincare_bohl") {
  const CheckResult id = poincare_bohl(shift(0, 0), kUnit, 3);
  CHECK(id.passed);
  CHECK(id.margin == doctest::Approx(2.0));

  const CheckResult neg = poincare_bohl(affine(-1, 0, 0, -1, 0, 0), kUnit, 3);
  CHECK_FALSE(neg.passed);
  CHECK(neg.margin == doctest::Approx(0.0));
  CHECK(neg.witness.has_value());

  const CheckResult a = poincare_bohl(shift(0.3, 0.4), kUnit, 3);
  CHECK(a.passed);
  CHECK(a.margin > 0.5);
  const double dense = oracle::dense_opposite_margin(
      [](double x, double y) { return std::array<double, 2>{x + 0.3, y + 0.4}; });
  CHECK(a.margin >= dense - 1e-12);
  CHECK(a.margin == doctest::Approx(dense).epsilon(1e-2));

  CHECK_THROWS_AS(poincare_bohl(shift(-1, 0), kUnit, 3), VanishingOnBoundary);

  const VectorField id3{3, 3, [](std::span<const double> x) { return Vec(x.begin(), x.end()); }};
  CHECK(poincare_bohl(id3, Region::unit_disk(3), 0).passed);
}

TEST_CASE("coercivity_radius") {
  const double radii[] = {1.0, 2.0, 4.0};
  const auto id = coercivity_radius(shift(0, 0), 2, radii, 3);
  REQUIRE(id);
  CHECK(id->first == 1.0);
  CHECK(id->second.passed);

  const auto b = coercivity_radius(shift(-2, 0), 2, radii, 3);
  REQUIRE(b);
  CHECK(b->first == 4.0);
  CHECK(b->second.margin >= 8.0 - 1e-9);
  CHECK(oracle::dense_min_inner([](double x, double y) { return std::array<double, 2>{x - 2, y}; }, 1.0) < 0.0);

  CHECK_FALSE(coercivity_radius(affine(-1, 0, 0, -1, 0, 0), 2, radii, 3));

  const double bad[] = {2.0, 1.0};
  CHECK_THROWS_AS(coercivity_radius(shift(0, 0), 2, bad, 3), InvalidInput);
}

TEST_CASE("certify_existence on the reference maps") {
  const Certificate id = certify_existence(shift(0, 0), kUnit);
  CHECK(id.verdict == Verdict::ZeroGuaranteed);
  CHECK(id.route == Route::Winding);
  CHECK(id.obstruction == 1);
  CHECK(id.min_boundary_norm > 0.0);
  CHECK_FALSE(id.extension_witness_present);

  const Certificate far = certify_existence(shift(3, 3), kUnit);
  CHECK(far.verdict == Verdict::NoConclusion);
  CHECK(far.obstruction == 0);
  CHECK(far.reason == CatReason::WindingZero);
  CHECK(far.extension_witness_present);
  REQUIRE(far.extension_witness);
  CHECK(norm((*far.extension_witness)(Vec{0.0, 0.0})) > 0.0);

  const Certificate big = certify_existence(shift(-2, 0), Region::disk({0.0, 0.0}, 4.0));
  CHECK(big.verdict == Verdict::ZeroGuaranteed);
  CHECK(big.route == Route::Winding);

  const VectorField into3{2, 3, [](std::span<const double> x) { return Vec{x[0], x[1], 1.0}; }};
  const Certificate deficient = certify_existence(into3, kUnit);
  CHECK(deficient.verdict == Verdict::NoConclusion);
  CHECK(deficient.reason == CatReason::CodomainDimExcess);
  CHECK_FALSE(deficient.route);

  const Certificate edge = certify_existence(shift(-1, 0), kUnit);
  CHECK(edge.verdict == Verdict::ZeroOnBoundary);
  CHECK(edge.min_boundary_norm == 0.0);

  const VectorField down{2, 1, [](std::span<const double> x) { return Vec{x[0]}; }};
  CHECK_THROWS_AS(certify_existence(down, kUnit), Unsupported);
  CHECK_THROWS_AS(certify_existence(shift(0, 0), Region::unit_disk(3)), InvalidInput);
}

TEST_CASE("certify_existence in one dimension") {
  const Region seg = Region::unit_disk(1);
  const Certificate c = certify_existence(testing::scalar([](double s) { return s * s * s - 0.5; }), seg);
  CHECK(c.verdict == Verdict::ZeroGuaranteed);
  CHECK(c.route == Route::SignChange);
  CHECK(c.obstruction == 1);

  const Certificate none = certify_existence(testing::scalar([](double s) { return s * s + 1; }), seg);
  CHECK(none.verdict == Verdict::NoConclusion);
  CHECK(none.obstruction == 0);
}

TEST_CASE("higher dimensions go through the never-opposite check") {
  const VectorField f{3, 3, [](std::span<const double> x) { return Vec{x[0] + 0.1, x[1], x[2] - 0.2}; }};
  const Certificate c = certify_existence(f, Region::unit_disk(3));
  CHECK(c.verdict == Verdict::ZeroGuaranteed);
  CHECK(c.route == Route::PoincareBohl);

  const VectorField g{3, 3, [](std::span<const double> x) { return Vec{-x[0], -x[1], -x[2]}; }};
  CHECK(certify_existence(g, Region::unit_disk(3)).verdict == Verdict::NoConclusion);
}

TEST_CASE("rigor labels") {
  CertifyOptions opts;
  opts.lipschitz = 1.0;
  const Certificate r = certify_existence(shift(0, 0), kUnit, opts);
  CHECK(r.rigor == Rigor::Rigorous);
  for (const CheckResult& c : r.evidence) CHECK(c.rigor == Rigor::Rigorous);

  opts.force_heuristic = true;
  const Certificate h = certify_existence(shift(0, 0), kUnit, opts);
  CHECK(h.rigor == Rigor::Heuristic);
  CHECK(h.verdict == Verdict::ZeroGuaranteed);

  CHECK(certify_existence(shift(0, 0), kUnit).rigor == Rigor::Heuristic);
}

TEST_CASE("certify_coercive") {
  const double radii[] = {1.0, 2.0, 4.0};
  const Certificate c = certify_coercive(shift(-2, 0), radii);
  CHECK(c.verdict == Verdict::ZeroGuaranteed);
  CHECK(c.route == Route::CoerciveReduction);
  CHECK(c.region == Region::disk({0.0, 0.0}, 4.0));

  const Certificate none = certify_coercive(affine(-1, 0, 0, -1, 0, 0), radii);
  CHECK(none.verdict == Verdict::NoConclusion);
}

TEST_CASE("enum strings") {
  for (Verdict v : {Verdict::ZeroGuaranteed, Verdict::NoConclusion, Verdict::ZeroOnBoundary}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
  for (Route r : {Route::SignChange, Route::Winding, Route::PoincareBohl, Route::CoerciveReduction}) {
    CHECK(route_from_string(to_string(r)) == r);
  }
  CHECK_THROWS_AS(verdict_from_string("maybe"), InvalidInput);
}

TEST_CASE("soundness on maps with known zero sets") {
  struct Case {
    std::string text;
    int n;
    std::vector<Vec> zeros;
  };
  std::vector<Case> cases;
  testing::Gen g(31);
  for (int i = 0; i < 10; ++i) {
    const double a = g.uniform(-1.5, 1.5), b = g.uniform(-1.5, 1.5);
    const double k = g.uniform(0.3, 2.0), m = g.uniform(-2.0, 2.0);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.4f*(x1 - %.4f) - %.4f*(x2 - %.4f), %.4f*(x1 - %.4f) + %.4f*(x2 - %.4f)", k,
                  a, m, b, m, a, k, b);
    const double ra = std::round(a * 1e4) / 1e4, rb = std::round(b * 1e4) / 1e4;
    cases.push_back({buf, 2, {Vec{ra, rb}}});
  }
  for (int i = 0; i < 8; ++i) {
    const double c = g.uniform(0.05, 1.0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "x1^2 - x2^2 - %.4f, 2*x1*x2", c);
    const double r = std::sqrt(std::round(c * 1e4) / 1e4);
    cases.push_back({buf, 2, {Vec{r, 0.0}, Vec{-r, 0.0}}});
  }
  for (int i = 0; i < 6; ++i) {
    const double c = g.uniform(-1.0, 1.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "x1^3 - %.4f", c);
    cases.push_back({buf, 1, {Vec{std::cbrt(std::round(c * 1e4) / 1e4)}}});
  }
  cases.push_back({"x1^2 + x2^2 + 1, x1", 2, {}});
  cases.push_back({"exp(x1), x2", 2, {}});
  cases.push_back({"cos(x1) + 2, sin(x2)", 2, {}});
  cases.push_back({"exp(x1) + x2^2, 1", 2, {}});
  cases.push_back({"x1^2 + 0.5", 1, {}});
  cases.push_back({"abs(x1) + 0.1", 1, {}});
  REQUIRE(cases.size() == 30);

  int guaranteed = 0;
  for (const Case& c : cases) {
    CAPTURE(c.text);
    const MapSpec spec = parse_map(c.text, c.n);
    for (int trial = 0; trial < 4; ++trial) {
      Vec center(static_cast<std::size_t>(c.n));
      for (double& v : center) v = g.uniform(-1.0, 1.0);
      const Region disk = Region::disk(center, g.uniform(0.2, 2.0));
      const Certificate cert = certify_existence(spec, disk);
      if (cert.verdict != Verdict::ZeroGuaranteed) continue;
      ++guaranteed;
      bool inside = false;
      for (const Vec& z : c.zeros) inside = inside || distance(z, center) <= disk.radius() + 1e-9;
      CHECK(inside);
    }
  }
  CHECK(guaranteed > 10);
}
