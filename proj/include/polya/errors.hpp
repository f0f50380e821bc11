// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace polya {

// Invalid argument or malformed input. The CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded. The CLI maps this to exit code 3.
class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace polya
