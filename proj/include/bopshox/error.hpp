#pragma once

#include <stdexcept>
#include <string>

namespace bopshox {

enum class Errc {
  // parameter validation
  NonPositiveParameter,
  CouplingOutOfRange,
  FrequencyOrderViolation,
  // numerics
  OrderTooLarge,
  ConvergenceFailure,
  StepUnderflow,
  Overflow,
  BracketFailure,
  NonConvergence,
  QuadratureNotConverged,
  DegenerateLine,
  // I/O and configuration
  SchemaMismatch,
  ConfigError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Configuration-class failures map to CLI exit code 2, numerical ones to 3.
inline bool is_config_error(Errc c) noexcept {
  switch (c) {
    case Errc::NonPositiveParameter:
    case Errc::CouplingOutOfRange:
    case Errc::FrequencyOrderViolation:
    case Errc::SchemaMismatch:
    case Errc::ConfigError:
    case Errc::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace bopshox
