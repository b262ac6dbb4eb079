#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace permbound {

using Vertex = int;  // 1-based position label in [n]

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed graph value (self-loop, negative size).
class InvalidGraph : public Error {
public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
public:
  VertexOutOfRange(Vertex v, int n);
  Vertex vertex() const noexcept { return vertex_; }

private:
  Vertex vertex_;
};

// Carries one oriented cycle v_1 -> ... -> v_k -> v_1 as {v_1, ..., v_k, v_1}.
class CyclicGraph : public Error {
public:
  explicit CyclicGraph(std::vector<Vertex> cycle);
  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }

private:
  std::vector<Vertex> cycle_;
};

class SizeMismatch : public Error {
public:
  SizeMismatch(int lhs, int rhs);
};

class NotABijection : public Error {
public:
  using Error::Error;
};

class LimitExceeded : public Error {
public:
  LimitExceeded(int n, int limit);
  int size() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

private:
  int n_;
  int limit_;
};

class NotAdmissible : public Error {
public:
  using Error::Error;
};

class NonUniqueExtremes : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Raised when an internal cross-check fails; never expected on valid input.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace permbound
