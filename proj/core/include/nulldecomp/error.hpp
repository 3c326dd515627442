#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nulldecomp {

enum class ErrorCode {
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  BadChecksumChar,
  TruncatedPayload,
  EmptyGraph,
  NotUnicyclic,
  UnknownVertex,
  NotAForest,
  NotATree,
  WrongType,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input-format error; `line` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nulldecomp
