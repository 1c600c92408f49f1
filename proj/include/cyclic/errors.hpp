#ifndef CYCLIC_ERRORS_HPP
#define CYCLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclic {

// Bad arguments or violated preconditions. CLI exit code 1.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured memory/range/subdivision budget. CLI exit code 2.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed. CLI exit code 3.
class invariant_error : public std::runtime_error {
public:
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cyclic

#endif
