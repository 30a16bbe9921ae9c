#pragma once

#include <stdexcept>

namespace cfdisc {

// Raised when a verified-by-construction identity fails to hold.
// Signals a bug (or a theory violation), never bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cfdisc
