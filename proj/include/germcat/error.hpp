#pragma once

#include <stdexcept>
#include <string>

namespace germcat {

enum class ErrorKind {
  UnknownElement,
  InvalidPoset,
  EmptyBase,
  MeetUnavailable,
  NotAFilter,
  IllFormedDiagram,
  NotComposable,
  NotMono,
  NonEnumerableFilter,
  AgreementNotDefinable,
  DimensionOverflow,
  InvalidSimplicialSet,
  InvalidArgument,
  SchemaError,
  Budget,
  MaxSize,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by request parsing; `pointer()` is an RFC 6901 JSON pointer to the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorKind::SchemaError, pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace germcat
