#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by the zero element of Q(v).
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero scalar") {}
};

/// Numeric specialization hit a (near-)zero denominator.
class EvaluationSingularity : public Error {
public:
  using Error::Error;
};

/// Argument outside the operation's domain: bad label, index, selection rule.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computed object failed a self-check that holds at generic q.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Requested Verma level beyond the configured cap.
class LevelCapExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace qcat
