#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zerocert {

using Vec = std::vector<double>;

/// Side-effect-free evaluator of a map R^n -> R^m.
using Evaluator = std::function<Vec(std::span<const double>)>;

/// A map F: R^n -> R^m together with its dimensions. MapSpec produces these;
/// tests and internal reductions (x - f(x), rescaled maps) build them from
/// lambdas.
struct VectorField {
  int n = 0;
  int m = 0;
  Evaluator eval;

  Vec operator()(std::span<const double> x) const { return eval(x); }
};

enum class Rigor { Heuristic, Rigorous };

const char* to_string(Rigor rigor);
Rigor rigor_from_string(const std::string& s);

/// The weaker of two rigor labels.
inline Rigor weakest(Rigor a, Rigor b) {
  return (a == Rigor::Rigorous && b == Rigor::Rigorous) ? Rigor::Rigorous : Rigor::Heuristic;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vec axpby(double alpha, std::span<const double> a, double beta, std::span<const double> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
  return out;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace zerocert
