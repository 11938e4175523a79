// Error types shared across the library. InputError covers malformed or
// inconsistent input documents; the others signal violated mathematical
// preconditions.

#ifndef OGPD_ERRORS_HPP_
#define OGPD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ogpd {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::string pointer = {})
      : std::runtime_error(pointer.empty() ? message : pointer + ": " + message),
        pointer_(std::move(pointer)) {}

  // JSON pointer of the offending location, empty when not applicable.
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (e.g. restriction to an
// identity that is not below the arrow's domain).
struct PreconditionError : MathError {
  using MathError::MathError;
};

// The structure is not a valid ordered groupoid in a way the operation
// cannot work around (e.g. zero or several restriction candidates).
struct StructuralDefect : MathError {
  using MathError::MathError;
};

struct NotComposable : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotPrincipallyDirected : MathError {
  using MathError::MathError;
};

}  // namespace ogpd

#endif  // OGPD_ERRORS_HPP_
