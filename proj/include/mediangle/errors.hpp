#pragma once

#include <stdexcept>
#include <string>

namespace mediangle {

// Bad or inconsistent input: malformed files, precondition violations,
// out-of-range parameters. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search budget or enumeration cap was exhausted before the
// computation could decide. The result is inconclusive, not false.
// CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A property that should hold on well-formed inputs was observed to fail,
// e.g. angle values disagreeing between shared cycles on a non-mediangle
// graph. CLI maps this to exit code 1.
struct property_error : std::runtime_error {
  explicit property_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mediangle
