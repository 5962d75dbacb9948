#pragma once

#include <stdexcept>
#include <string>

namespace kbinom {

/// Failure categories shared by the whole library.  They map one-to-one onto
/// the status codes of the C API, so every throw site picks the category a
/// caller can actually act on.
enum class ErrorCode {
  Parse,        ///< malformed textual input (word, signed word, run-length, sequence)
  Range,        ///< argument outside the documented domain (k = 0, n < 2, empty word, ...)
  Overflow,     ///< an exact 64-bit computation would wrap; caller should use the big-int path
  Unsupported,  ///< operation defined only for a restricted alphabet or pattern shape
  Budget,       ///< an enumeration would exceed the configured budget
  NoMem,        ///< allocation failure surfaced through the C API
};

/// Library-wide exception type.  The message always names the offending
/// input or the budget actually required, so it can be shown verbatim.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_parse(const std::string& what) { throw Error(ErrorCode::Parse, what); }
[[noreturn]] inline void throw_range(const std::string& what) { throw Error(ErrorCode::Range, what); }
[[noreturn]] inline void throw_overflow(const std::string& what) { throw Error(ErrorCode::Overflow, what); }
[[noreturn]] inline void throw_unsupported(const std::string& what) { throw Error(ErrorCode::Unsupported, what); }
[[noreturn]] inline void throw_budget(const std::string& what) { throw Error(ErrorCode::Budget, what); }

}  // namespace kbinom
