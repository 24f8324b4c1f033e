#pragma once

#include <stdexcept>
#include <string>

namespace modorb {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modorb
