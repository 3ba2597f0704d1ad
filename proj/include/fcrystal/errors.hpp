#pragma once

#include <stdexcept>
#include <string>

namespace fcrystal {

// Bad or unsupported input (config content, unsupported parameter ranges).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation exceeds a configured resource bound
// (group order, point count, integer width).  CLI exit code 2.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal structural invariant failed.  These are conditions the theory
// guarantees; a violation means the implementation (or its inputs) broke an
// assumption, so the CLI maps this to exit code 3.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

// Always-on invariant check (never compiled out).
inline void invariant(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}

}  // namespace fcrystal
