#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zerocert/errors.hpp"
#include "zerocert/locator.hpp"

using namespace zerocert;

namespace {

const Region kSquare = Region::box({-1.0, -1.0}, {1.0, 1.0});

VectorField shift(double p, double q) {
  return testing::planar([=](double x, double y) { return std::array<double, 2>{x + p, y + q}; });
}

}  // namespace

TEST_CASE("identity") {
  const LocateResult r = locate_zero(shift(0, 0), kSquare);
  CHECK(norm(r.point) <= 1e-6);
  CHECK(r.residual <= 1e-9);
}

TEST_CASE("off-center zero") {
  const LocateResult r = locate_zero(shift(-0.3, -0.4), kSquare);
  CHECK(distance(r.point, Vec{0.3, 0.4}) <= 1e-6);
  CHECK((r.residual <= 1e-9 || r.cell_diameter <= 1e-6));
  CHECK(r.residual == doctest::Approx(distance(r.point, Vec{0.3, 0.4})));
  CHECK(r.iterations == static_cast<int>(r.trail.size()));
  for (const TrailStep& s : r.trail) CHECK(s.winding != 0);
}

TEST_CASE("cube root by bisection") {
  const VectorField f = testing::scalar([](double s) { return s * s * s - 0.5; });
  LocateOptions opts;
  opts.eps_x = 1e-12;
  const LocateResult r = locate_zero(f, Region::box({-1.0}, {1.0}), opts);
  CHECK(std::abs(r.point[0] - std::cbrt(0.5)) <= 1e-9);
  CHECK(std::abs(r.point[0] - oracle::bisect_root([](double s) { return s * s * s - 0.5; }, -1, 1)) <= 1e-9);
  CHECK_THROWS_AS(locate_zero(testing::scalar([](double s) { return s * s + 1; }), Region::box({-1.0}, {1.0})),
                  DegreeLost);
}

TEST_CASE("z^2 - 1/4 converges to one of its roots") {
  const VectorField f = testing::planar(
      [](double x, double y) { return std::array<double, 2>{x * x - y * y - 0.25, 2 * x * y}; });
  const LocateResult r = locate_zero(f, kSquare);
  const double d = std::min(distance(r.point, Vec{0.5, 0.0}), distance(r.point, Vec{-0.5, 0.0}));
  CHECK(d <= 1e-6);
  CHECK(r.residual <= 1e-6);
}

TEST_CASE("jiggling away from zeros on the cut lines") {
  // Zeros at (0, +-0.5) sit on the first vertical cut; eps_f = 0 forces a jiggle.
  const VectorField f = testing::planar(
      [](double x, double y) { return std::array<double, 2>{y * y - x * x - 0.25, 2 * x * y}; });
  LocateOptions opts;
  opts.eps_f = 0.0;
  const LocateResult r = locate_zero(f, Region::box({-1.0, 0.0}, {1.0, 1.0}), opts);
  CHECK(distance(r.point, Vec{0.0, 0.5}) <= 1e-6);
}

TEST_CASE("no degree, no descent") {
  CHECK_THROWS_AS(locate_zero(shift(3, 3), kSquare), DegreeLost);
  LocateOptions opts;
  opts.max_iter = 2;
  opts.eps_f = 0.0;
  CHECK_THROWS_AS(locate_zero(shift(-0.31, -0.4), kSquare, opts), BudgetExhausted);
  CHECK_THROWS_AS(locate_zero(shift(0, 0), Region::unit_disk(2)), InvalidInput);
}

TEST_CASE("split_box") {
  const auto subs = split_box(kSquare, {0.2, -0.1});
  CHECK(subs[0] == Region::box({-1.0, -1.0}, {0.2, -0.1}));
  CHECK(subs[2] == Region::box({0.2, -0.1}, {1.0, 1.0}));
  CHECK_THROWS_AS(split_box(kSquare, {1.0, 0.0}), InvalidInput);
}

TEST_CASE("brouwer fixed points") {
  const VectorField half = testing::planar(
      [](double x, double y) { return std::array<double, 2>{(x + 0.2) / 2, (y - 0.1) / 2}; });
  const LocateResult r = brouwer_fixed_point(half);
  CHECK(distance(r.point, Vec{0.2, -0.1}) <= 1e-6);

  const VectorField constant = testing::planar([](double, double) { return std::array<double, 2>{0.3, -0.6}; });
  CHECK(distance(brouwer_fixed_point(constant).point, Vec{0.3, -0.6}) <= 1e-6);

  const VectorField rotation = testing::planar([](double x, double y) { return std::array<double, 2>{-y, x}; });
  const LocateResult rot = brouwer_fixed_point(rotation);
  CHECK(norm(rot.point) <= 1e-6);

  const VectorField flip = testing::planar([](double x, double y) { return std::array<double, 2>{-x, y}; });
  const LocateResult edge = brouwer_fixed_point(flip);
  CHECK(edge.residual <= 1e-9);

  CHECK(std::abs(brouwer_fixed_point(testing::scalar([](double s) { return 0.5 * s + 0.25; })).point[0] - 0.5) <= 1e-6);

  CHECK_THROWS_AS(brouwer_fixed_point(shift(3, 3)), InvalidInput);
}
