#pragma once

#include <stdexcept>
#include <string>

namespace vfsim {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad argument to a model or planner operation (non-positive dt, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A context lacks a factor named in a frame's gamma set. Distinct from
/// "does not admit": the query itself is malformed.
class MissingFactorError : public Error {
 public:
  MissingFactorError(const std::string& factor, const std::string& where)
      : Error("missing factor '" + factor + "' in " + where), factor_(factor) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// A graph edge violates its kind's subset rule; names the offending entry.
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& what, std::string offending = {})
      : Error(what), offending_(std::move(offending)) {}
  const std::string& offending() const { return offending_; }

 private:
  std::string offending_;
};

/// An edge would close a cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// Tree compilation ordering does not cover every gamma factor.
class InvalidOrderingError : public Error {
 public:
  using Error::Error;
};

/// A dispatch leaf has no usable candidate.
class NoFeasibleModelError : public Error {
 public:
  using Error::Error;
};

/// Not even the head frame fits the per-step budget.
class DeadlineInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Line-numbered diagnostic for library/scenario/trace files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace vfsim
