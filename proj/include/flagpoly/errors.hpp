#ifndef FLAGPOLY_ERRORS_HPP
#define FLAGPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagpoly {

// Error taxonomy mirrored by the CLI exit codes:
//   InvalidInput -> 2, Unsupported -> 3, ResourceLimit -> 4.
// A failed mathematical check is not an exception; commands report it
// and exit 1.

struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace flagpoly

#endif
