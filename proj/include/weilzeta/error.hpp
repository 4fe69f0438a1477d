#pragma once

#include <stdexcept>
#include <string>

namespace weilzeta {

// Every module reports contract violations with this type. The message starts
// with a short stable phrase ("not prime", "zero divisor", ...) that callers
// and the CLI can match on; anything after a colon is detail.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weilzeta
