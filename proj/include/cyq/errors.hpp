#pragma once

#include <stdexcept>
#include <string>

namespace cyq {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyProfile : public Error {
 public:
  EmptyProfile() : Error("service profile is empty") {}
};

class InvalidServiceTime : public Error {
 public:
  InvalidServiceTime(long index, double value)
      : Error("service time s_" + std::to_string(index) + " = " +
              std::to_string(value) + " must be a positive finite number"),
        index(index),
        value(value) {}
  long index;  // 1-based
  double value;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(long index, long limit)
      : Error("index " + std::to_string(index) + " outside [1, " +
              std::to_string(limit) + "]"),
        index(index),
        limit(limit) {}
  long index;
  long limit;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DegenerateDecomposition : public Error {
 public:
  DegenerateDecomposition()
      : Error("decomposition needs at least two servers") {}
};

class CurveTooShort : public Error {
 public:
  CurveTooShort(long needed, long have)
      : Error("flow-equivalent curve covers " + std::to_string(have) +
              " requests, need " + std::to_string(needed)),
        needed(needed),
        have(have) {}
  long needed;
  long have;
};

class InvalidHorizon : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(long line, const std::string& what)
      : Error("parse error" +
              (line > 0 ? " at line " + std::to_string(line) : "") + ": " +
              what),
        line(line) {}
  long line;  // 0 when unknown
};

class MissingField : public Error {
 public:
  explicit MissingField(const std::string& field)
      : Error("missing field \"" + field + "\""), field(field) {}
  std::string field;
};

class UnknownField : public Error {
 public:
  explicit UnknownField(const std::string& field)
      : Error("unknown field \"" + field + "\""), field(field) {}
  std::string field;
};

}  // namespace cyq
