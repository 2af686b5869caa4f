#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sciento {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyAuthorError : public Error {
 public:
  EmptyAuthorError() : Error("author name is empty after normalization") {}
};

// Malformed input record. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateArticleError : public Error {
 public:
  explicit DuplicateArticleError(const std::string& id)
      : Error("duplicate article id '" + id + "'") {}
};

class UnknownArticleError : public Error {
 public:
  explicit UnknownArticleError(const std::string& id)
      : Error("unknown article '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class InvalidDimensionsError : public Error {
 public:
  using Error::Error;
};

class NegativeValueError : public Error {
 public:
  NegativeValueError() : Error("hirsch_point: negative value") {}
};

class NotSortedError : public Error {
 public:
  NotSortedError() : Error("dense_rank: values are not non-increasing") {}
};

class InfeasibleParamsError : public Error {
 public:
  using Error::Error;
};

class UnknownTargetError : public Error {
 public:
  explicit UnknownTargetError(const std::string& author)
      : Error("unknown target author '" + author + "'") {}
};

}  // namespace sciento
