#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcurv {

// Base of everything the library throws. InputError covers bad graphs,
// bad parameters and unmet preconditions; InternalError means a computed
// certificate failed to verify, i.e. a bug rather than bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public InputError {
 public:
  using InputError::InputError;
};

class SelfLoopError : public InputError {
 public:
  explicit SelfLoopError(std::size_t v)
      : InputError("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  std::size_t vertex;
};

class DuplicateEdgeError : public InputError {
 public:
  DuplicateEdgeError(std::size_t u, std::size_t v)
      : InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v)),
        u(u),
        v(v) {}
  std::size_t u, v;
};

class DisconnectedError : public InputError {
 public:
  // a and b lie in different components
  DisconnectedError(std::size_t a, std::size_t b)
      : InputError("graph is disconnected: vertices " + std::to_string(a) + " and " +
                   std::to_string(b) + " lie in different components"),
        a(a),
        b(b) {}
  std::size_t a, b;
};

class NotAdjacentError : public InputError {
 public:
  NotAdjacentError(std::size_t u, std::size_t v)
      : InputError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                   " are not adjacent") {}
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                   ": " + what),
        line(line),
        column(column) {}
  std::size_t line, column;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

#define RCURV_PRECONDITION_ERROR(Name)      \
  class Name : public PreconditionError {   \
   public:                                  \
    using PreconditionError::PreconditionError; \
  };

RCURV_PRECONDITION_ERROR(SameVertexError)
RCURV_PRECONDITION_ERROR(SupportTooLargeError)
RCURV_PRECONDITION_ERROR(NotDistanceRegularError)
RCURV_PRECONDITION_ERROR(NotReflectiveError)
RCURV_PRECONDITION_ERROR(NotParallelError)
RCURV_PRECONDITION_ERROR(TrivialGraphError)
RCURV_PRECONDITION_ERROR(DegenerateFormError)
RCURV_PRECONDITION_ERROR(NonpositiveCurvatureError)
RCURV_PRECONDITION_ERROR(DisconnectedSubgraphError)

#undef RCURV_PRECONDITION_ERROR

class FactorizationFailed : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace rcurv
