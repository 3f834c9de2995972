#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace acg {

/// Syntax or validation failure while parsing expression text.
/// `offset` is the byte position in the source; `expected` describes the
/// token set that would have been accepted there.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset, std::string expected)
      : std::runtime_error(std::move(message)), offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

/// Runtime failure while evaluating an expression (division by zero,
/// zero base with negative exponent, angle of the origin). Carries the
/// pretty-printed offending subexpression.
class EvalError : public std::runtime_error {
public:
  EvalError(std::string message, std::string subexpr)
      : std::runtime_error(message + " in '" + subexpr + "'"),
        subexpr_(std::move(subexpr)) {}

  const std::string& subexpr() const { return subexpr_; }

private:
  std::string subexpr_;
};

/// The coframe fails its spanning condition at a point: the stacked
/// matrix [alpha; conj alpha] is singular or ill-conditioned.
class DegenerateCoframeError : public std::runtime_error {
public:
  DegenerateCoframeError(std::string message, double cond)
      : std::runtime_error(std::move(message)), cond_(cond) {}

  double condition_number() const { return cond_; }

private:
  double cond_;
};

/// Gauss-Newton projection onto a zero set did not converge, or the
/// Jacobian lost rank along the way. Keeps the residual trace.
class ProjectionError : public std::runtime_error {
public:
  ProjectionError(std::string message, std::vector<double> trace)
      : std::runtime_error(std::move(message)), trace_(std::move(trace)) {}

  const std::vector<double>& residual_trace() const { return trace_; }

private:
  std::vector<double> trace_;
};

/// Config document rejected by the strict schema; `path` points at the
/// offending key in JSON-pointer style.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string message, std::string path)
      : std::runtime_error(std::move(message) + " at " + path),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace acg
