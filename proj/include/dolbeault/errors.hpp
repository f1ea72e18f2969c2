#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dolbeault {

using Int = std::int64_t;

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed configuration or command line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow");
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw DomainError("integer overflow");
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow");
  return out;
}

}  // namespace checked

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace dolbeault
