#pragma once

#include <stdexcept>
#include <string>

namespace nimp {

// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : Error {
  using Error::Error;
};

}  // namespace nimp
