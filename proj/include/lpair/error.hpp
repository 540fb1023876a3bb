#pragma once

#include <stdexcept>
#include <string>

namespace lpair {

// Bad parameters: out-of-range moduli, unsupported regions, table limits.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical self-check failed or an evaluation left its accuracy envelope.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency assertion that stays on in release builds.
inline void check(bool ok, const std::string& what) {
  if (!ok) throw NumericalError(what);
}

}  // namespace lpair
