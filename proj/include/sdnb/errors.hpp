#pragma once

#include <stdexcept>
#include <string>

namespace sdnb {

/// Invalid input or precondition violation by the caller.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

/// A request that is valid but outside what this implementation covers.
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& m) : std::runtime_error(m) {}
};

/// No self-dual normal basis exists for the requested (q, n).
struct nonexistence_error : std::runtime_error {
  explicit nonexistence_error(const std::string& m) : std::runtime_error(m) {}
};

/// Broken internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

}  // namespace sdnb
