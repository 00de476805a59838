#pragma once

#include <stdexcept>
#include <string>

namespace gctlab {

// Input violates a documented precondition (bad partition text, size
// mismatch, parity violation, ...). Maps to CLI exit code 2.
class invalid_input_error : public std::invalid_argument {
 public:
  explicit invalid_input_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Request exceeds a documented ceiling (character table rank, plethysm
// degree). Maps to CLI exit code 2.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A closed form was forced on inputs outside its domain. Callers using
// automatic method selection fall back to the character oracle instead.
class closed_form_inapplicable_error : public std::runtime_error {
 public:
  explicit closed_form_inapplicable_error(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal re-verification failed (closed form vs oracle mismatch, or a
// certificate that does not check out). Never swallowed. CLI exit code 1.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gctlab
