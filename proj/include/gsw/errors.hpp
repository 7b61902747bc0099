#ifndef GSW_ERRORS_HPP
#define GSW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsw {

/* Bad user input: malformed words, invalid presentations, out-of-range
 * parameters. CLI maps this to exit code 1. */
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* A configured resource bound (degree cap, row budget) was hit before the
 * requested computation could be certified. CLI maps this to exit code 2. */
struct computation_limit_error : std::runtime_error {
  explicit computation_limit_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace gsw

#endif
