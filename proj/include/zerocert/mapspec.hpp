#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zerocert/geometry.hpp"
#include "zerocert/vec.hpp"

namespace zerocert {

enum class ExprKind { Constant, Variable, Neg, Sin, Cos, Exp, Sqrt, Abs, Add, Sub, Mul, Div, Pow };

inline constexpr int kMaxExprDepth = 64;

/// Immutable expression tree over x1..xn. Copies share structure.
class Expr {
 public:
  static Expr constant(double value);
  /// 1-based variable index.
  static Expr variable(int index);
  static Expr unary(ExprKind kind, Expr operand);
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);

  ExprKind kind() const noexcept { return node_->kind; }
  double value() const noexcept { return node_->value; }
  /// Variable index or integer exponent.
  int index() const noexcept { return node_->index; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  /// Throws DomainError (with the point) on division by zero, sqrt of a
  /// negative number, or a non-finite result.
  double evaluate(std::span<const double> x) const;

  int depth() const;
  int max_variable() const;

  /// Minimal-parenthesis rendering that parses back to the same tree.
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    ExprKind kind;
    double value = 0.0;
    int index = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A map F: R^n -> R^m given as m expressions.
struct MapSpec {
  int n = 0;
  int m = 0;
  std::vector<Expr> components;
  std::string source_text;
  std::string digest;

  Vec evaluate(std::span<const double> x) const;
  VectorField field() const;
  /// Components rendered with Expr::to_string, joined by ", ".
  std::string to_string() const;
};

/// Parses `map := expr (',' expr)*` over variables x1..xn. Throws
/// SyntaxError (line/column), UndefinedVariable or NonIntegerExponent.
MapSpec parse_map(std::string_view text, int n);

/// Parses with n taken to be the number of components (self-maps R^n -> R^n).
MapSpec parse_self_map(std::string_view text);

/// Hex SHA-256 of the text with all whitespace removed.
std::string map_digest(std::string_view text);

/// max over sampled points of the central-difference Jacobian operator norm,
/// times a safety factor of 2. Step is 1e-6 times the region diameter.
double lipschitz_estimate(const VectorField& field, const Region& region, int samples);
double lipschitz_estimate(const MapSpec& spec, const Region& region, int samples);

struct BuiltinMap {
  std::string name;
  std::string text;
  int n;
  std::string description;
};

const std::vector<BuiltinMap>& builtin_maps();
/// nullptr when no builtin has this name.
const BuiltinMap* find_builtin(std::string_view name);

}  // namespace zerocert
