#pragma once

#include <stdexcept>
#include <string>

namespace lring {

// Failure categories surfaced to callers and to the CLI (exit code 2 prints
// the category name followed by the message).
enum class errc {
  syntax_error,
  unknown_generator,
  depth_exceeded,
  non_exact_division,
  non_integral_result,
  not_symmetric,
  insufficient_alphabet,
  window_too_small,
  non_polynomial_h,
  bound_exceeded,
  non_terminating,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) {
  throw error(c, what);
}

}  // namespace lring
