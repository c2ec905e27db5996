#ifndef FIBERCONE_ERRORS_HPP
#define FIBERCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibercone {

// Error categories, in the order of their process exit codes:
//   input (parse/semigroup) -> 2, no-reduction -> 3, truncation -> 4,
//   internal inconsistency -> 5.
enum class ErrorCategory { Input, NoReduction, Truncation, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }
  int exitCode() const {
    switch (category_) {
      case ErrorCategory::Input: return 2;
      case ErrorCategory::NoReduction: return 3;
      case ErrorCategory::Truncation: return 4;
      case ErrorCategory::Internal: return 5;
    }
    return 5;
  }

private:
  ErrorCategory category_;
};

class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(ErrorCategory::Input, msg) {}
};

// Malformed element or case-file text; carries a 0-based offset into the text.
class ParseError : public InputError {
public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class SemigroupError : public InputError {
public:
  explicit SemigroupError(const std::string& msg) : InputError(msg) {}
};

class NoReductionError : public Error {
public:
  explicit NoReductionError(const std::string& msg)
      : Error(ErrorCategory::NoReduction, msg) {}
};

class TruncationError : public Error {
public:
  explicit TruncationError(const std::string& msg)
      : Error(ErrorCategory::Truncation, msg) {}
};

// A theorem-level assertion failed: either a bug or an uncertified window.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg)
      : Error(ErrorCategory::Internal, msg) {}
};

}  // namespace fibercone

#endif
