#pragma once

#include <stdexcept>
#include <string>

namespace kc {

// bad user input: parse failures, out-of-range letters, dangling references
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a condition the algorithms guarantee was violated
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// search or size caps exceeded
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kc
