#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument is outside the documented domain (r < 1, p > 1, k > n, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Inputs do not fit together: an ordering that is not a permutation, a
/// trace that belongs to another graph, a non-tree passed as a tree.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but the operation declines to answer it.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// A bound was requested outside its hypothesis (r <= d).
class NotApplicableError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// Exhaustive search would exceed the free-vertex budget. Carries the
/// vertices that every percolating set must contain anyway.
class BudgetExceeded : public RefusalError {
 public:
  BudgetExceeded(const std::string& what, std::vector<VertexId> forced)
      : RefusalError(what), forced_(std::move(forced)) {}
  const std::vector<VertexId>& forced() const noexcept { return forced_; }

 private:
  std::vector<VertexId> forced_;
};

/// A certification clause did not hold.
class CertificationFailure : public Error {
 public:
  CertificationFailure(std::string clause, const std::string& what)
      : Error(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace bootperc
