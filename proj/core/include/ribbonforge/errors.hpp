#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbonforge {

/// Base of every exception thrown by the library.
///
/// `kind()` is a stable machine-readable tag used in the CLI's JSON error
/// payloads. `is_internal()` separates bugs (invariant violations) from
/// bad input.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, bool internal = false)
      : std::runtime_error(message), kind_(std::move(kind)), internal_(internal) {}

  const std::string& kind() const noexcept { return kind_; }
  bool is_internal() const noexcept { return internal_; }

 private:
  std::string kind_;
  bool internal_;
};

class LabelCountError : public Error {
 public:
  LabelCountError(const std::string& label, std::size_t count)
      : Error("LabelCountError", "label '" + label + "' appears " + std::to_string(count) +
                                     " times (expected 2)"),
        label_(label),
        count_(count) {}

  const std::string& label() const noexcept { return label_; }
  std::size_t count() const noexcept { return count_; }

 private:
  std::string label_;
  std::size_t count_;
};

class EmptyLabelError : public Error {
 public:
  EmptyLabelError() : Error("EmptyLabelError", "arrow label is empty") {}
};

class LabelSyntaxError : public Error {
 public:
  explicit LabelSyntaxError(const std::string& label)
      : Error("LabelSyntaxError", "label '" + label + "' is not a token over [A-Za-z0-9_]") {}
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("UnknownLabel", "no edge labelled '" + label + "'") {}
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(std::size_t index)
      : Error("UnknownVertex", "no vertex with index " + std::to_string(index)) {}
};

class NotConnected : public Error {
 public:
  NotConnected() : Error("NotConnected", "ribbon graph is not connected") {}
};

class NotABouquet : public Error {
 public:
  explicit NotABouquet(std::size_t vertices)
      : Error("NotABouquet", "expected exactly one vertex, found " + std::to_string(vertices)) {}
};

class SizeBoundExceeded : public Error {
 public:
  SizeBoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
      : Error("SizeBoundExceeded", what + ": " + std::to_string(size) + " exceeds bound " +
                                       std::to_string(bound)) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("ParseError", "line " + std::to_string(line) + ": " + message) {}
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class StrandCountError : public Error {
 public:
  StrandCountError(const std::string& strand, std::size_t count)
      : Error("StrandCountError", "strand '" + strand + "' appears " + std::to_string(count) +
                                      " times (expected 2)") {}
};

class InvalidScript : public Error {
 public:
  explicit InvalidScript(const std::string& message) : Error("InvalidScript", message) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error("InvalidArgument", message) {}
};

class InternalInvariantViolation : public Error {
 public:
  explicit InternalInvariantViolation(const std::string& message)
      : Error("InternalInvariantViolation", message, true) {}
};

class OrientabilityViolation : public Error {
 public:
  explicit OrientabilityViolation(const std::string& message)
      : Error("OrientabilityViolation", message, true) {}
};

/// Raised when a non-orientable one-boundary bouquet has no edge whose
/// deletion keeps the boundary count. The genus-reduction argument says
/// this cannot happen.
class ClaimViolation : public Error {
 public:
  explicit ClaimViolation(const std::string& message) : Error("ClaimViolation", message, true) {}
};

}  // namespace ribbonforge
