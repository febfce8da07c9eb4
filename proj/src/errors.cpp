#include "zerocert/errors.hpp"

#include <sstream>

#include "zerocert/vec.hpp"

namespace zerocert {

namespace {

std::string format_point(const std::vector<double>& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::VanishingOnBoundary: return "VanishingOnBoundary";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::NotANullHomotopy: return "NotANullHomotopy";
    case ErrorKind::DegreeLost: return "DegreeLost";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndefinedVariable: return "UndefinedVariable";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

const char* to_string(Rigor rigor) {
  return rigor == Rigor::Rigorous ? "rigorous" : "heuristic";
}

Rigor rigor_from_string(const std::string& s) {
  if (s == "rigorous") return Rigor::Rigorous;
  if (s == "heuristic") return Rigor::Heuristic;
  throw InvalidInput("unknown rigor label '" + s + "'");
}

VanishingOnBoundary::VanishingOnBoundary(std::size_t index, std::vector<double> point)
    : Error(ErrorKind::VanishingOnBoundary,
            "map vanishes on the boundary at sample " + std::to_string(index) + " " +
                format_point(point)),
      index_(index),
      point_(std::move(point)) {}

Unsupported::Unsupported(int n, int m)
    : Error(ErrorKind::Unsupported, "unsupported dimensions n=" + std::to_string(n) +
                                        ", m=" + std::to_string(m)),
      n_(n),
      m_(m) {}

EndpointMismatch::EndpointMismatch(double max_deviation)
    : Error(ErrorKind::EndpointMismatch,
            "homotopy endpoints differ by " + std::to_string(max_deviation)),
      max_deviation_(max_deviation) {}

DegreeLost::DegreeLost(std::vector<double> lower, std::vector<double> upper)
    : Error(ErrorKind::DegreeLost, "no sub-cell carries nonzero degree in cell " +
                                       format_point(lower) + " - " + format_point(upper)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {}

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : Error(ErrorKind::SyntaxError, "syntax error at " + std::to_string(line) + ":" +
                                        std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

UndefinedVariable::UndefinedVariable(int index, int n)
    : Error(ErrorKind::UndefinedVariable, "undefined variable x" + std::to_string(index) +
                                              " (map has n=" + std::to_string(n) + ")"),
      index_(index),
      n_(n) {}

NonIntegerExponent::NonIntegerExponent(int line, int column)
    : Error(ErrorKind::NonIntegerExponent, "exponent must be an integer literal at " +
                                               std::to_string(line) + ":" +
                                               std::to_string(column)) {}

DomainError::DomainError(const std::string& what, std::vector<double> point)
    : Error(ErrorKind::DomainError, what + " at " + format_point(point)),
      point_(std::move(point)) {}

}  // namespace zerocert
