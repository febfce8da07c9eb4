#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerocert {

enum class ErrorKind {
  InvalidInput,
  VanishingOnBoundary,
  BudgetExhausted,
  Unsupported,
  EndpointMismatch,
  NotANullHomotopy,
  DegreeLost,
  SyntaxError,
  UndefinedVariable,
  NonIntegerExponent,
  DomainError,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. Callers that only need the
/// category can switch on kind(); the derived types carry the payload.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

class VanishingOnBoundary : public Error {
 public:
  VanishingOnBoundary(std::size_t index, std::vector<double> point);

  std::size_t index() const noexcept { return index_; }
  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::size_t index_;
  std::vector<double> point_;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::optional<long> best_estimate = std::nullopt)
      : Error(ErrorKind::BudgetExhausted, what), best_estimate_(best_estimate) {}

  std::optional<long> best_estimate() const noexcept { return best_estimate_; }

 private:
  std::optional<long> best_estimate_;
};

class Unsupported : public Error {
 public:
  Unsupported(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

 private:
  int n_;
  int m_;
};

class EndpointMismatch : public Error {
 public:
  explicit EndpointMismatch(double max_deviation);

  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

class NotANullHomotopy : public Error {
 public:
  explicit NotANullHomotopy(const std::string& what)
      : Error(ErrorKind::NotANullHomotopy, what) {}
};

class DegreeLost : public Error {
 public:
  DegreeLost(std::vector<double> lower, std::vector<double> upper);

  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class UndefinedVariable : public Error {
 public:
  UndefinedVariable(int index, int n);

  int index() const noexcept { return index_; }
  int n() const noexcept { return n_; }

 private:
  int index_;
  int n_;
};

class NonIntegerExponent : public Error {
 public:
  NonIntegerExponent(int line, int column);
};

class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::vector<double> point);

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

}  // namespace zerocert
