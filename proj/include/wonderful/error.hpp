#pragma once

#include <stdexcept>
#include <string>

namespace wonderful {

// Raised for malformed input and violated preconditions.  The message is
// the user-facing diagnostic (the CLI prints it verbatim).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wonderful
