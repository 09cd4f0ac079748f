#pragma once

#include <stdexcept>
#include <string>

namespace plainsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text was empty or whitespace-only where content is required.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's argument contract.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A corpus record does not match the declared schema.
class SchemaError : public Error {
 public:
  SchemaError(std::string uid, std::string field, const std::string& what)
      : Error("record '" + uid + "', field '" + field + "': " + what),
        uid_(std::move(uid)),
        field_(std::move(field)) {}

  const std::string& uid() const noexcept { return uid_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string uid_;
  std::string field_;
};

/// A statistic has no defined value for the given input (e.g. zero denominators).
class UndefinedStatisticError : public Error {
 public:
  using Error::Error;
};

}  // namespace plainsum
