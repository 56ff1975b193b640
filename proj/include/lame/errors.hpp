#pragma once

#include <stdexcept>
#include <string>

namespace lame {

// Argument outside the region where an operation is defined.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Real power of a negative base.
struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

struct QuantizationError : std::domain_error {
  QuantizationError(const std::string& what, int level)
      : std::domain_error(what), level(level) {}
  int level;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularConfigurationError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace lame
