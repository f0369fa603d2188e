#ifndef ALPHAPART_ERRORS_HPP
#define ALPHAPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alphapart {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or out-of-domain arguments.
class validation_error : public error {
public:
  using error::error;
};

// The extended-precision ceiling guard could not certify ceil(k^beta).
class precision_error : public error {
public:
  using error::error;
};

// A truncated summation would need more terms than the configured cap.
class truncation_error : public error {
public:
  using error::error;
};

// A table would exceed its memory budget.
class resource_error : public error {
public:
  using error::error;
};

} // namespace alphapart

#endif
