#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liftbraid {

/// Malformed or out-of-contract input (bad indices, disconnected coverings
/// where a connected one is required, mismatched strand counts, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No connected simple covering has the requested (degree, branch count,
/// total monodromy class).
class NotRealizable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration outgrew its configured bound before finishing.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Coset enumeration stopped at its limit; the index may be infinite.
class Inconclusive : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

}  // namespace liftbraid
