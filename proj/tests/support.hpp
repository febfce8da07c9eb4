#pragma once

#include <cstdint>
#include <random>

#include "oracles.hpp"
#include "zerocert/vec.hpp"

namespace testing {

inline constexpr int kPropertyCases = 100;

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline zerocert::VectorField planar(oracle::Planar f) {
  return {2, 2, [f](std::span<const double> x) {
            const auto y = f(x[0], x[1]);
            return zerocert::Vec{y[0], y[1]};
          }};
}

inline zerocert::VectorField scalar(std::function<double(double)> f) {
  return {1, 1, [f](std::span<const double> x) { return zerocert::Vec{f(x[0])}; }};
}

}  // namespace testing
