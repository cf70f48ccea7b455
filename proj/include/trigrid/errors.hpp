#pragma once

#include <stdexcept>
#include <string>

namespace trigrid {

enum class LineDirection { column, row, diagonal };

const char* to_string(LineDirection d);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base of every "this input is not a valid diagram" failure.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateCell : public ValidationError {
 public:
  DuplicateCell(int col, int row);
  int col;
  int row;
};

class LineCountViolation : public ValidationError {
 public:
  LineCountViolation(LineDirection direction, int index, int count);
  LineDirection direction;
  int index;
  int count;
};

class DuplicatePoint : public ValidationError {
 public:
  DuplicatePoint(std::string x, std::string y);
  std::string x;
  std::string y;
};

class UnpairedPoint : public ValidationError {
 public:
  UnpairedPoint(LineDirection direction, std::string value, int count);
  LineDirection direction;
  std::string value;  // the line coordinate as "p/q"
  int count;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class TooManyCrossings : public Error {
 public:
  TooManyCrossings(int crossings, int bound);
  int crossings;
  int bound;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

/// Malformed document; `location` is "line N" for syntax errors or a JSON
/// pointer for field errors.
class SchemaError : public Error {
 public:
  SchemaError(std::string location, const std::string& what);
  std::string location;
};

}  // namespace trigrid
