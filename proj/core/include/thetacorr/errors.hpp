#pragma once

#include <stdexcept>
#include <string>

namespace thetacorr {

// Base for every engine error. code() is a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ContextError : public Error {
 public:
  explicit ContextError(const std::string& what) : Error("context", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error("unsupported", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("parse", std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column), message_(what) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// An engine error raised while executing a statement, tagged with its location.
class LocatedError : public Error {
 public:
  LocatedError(const std::string& code, const std::string& what, int line, int column)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column), message_(what) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace thetacorr
