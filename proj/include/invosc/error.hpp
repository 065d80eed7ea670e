#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invosc {

enum class ErrorKind {
  Pole,                 // ln_gamma at a non-positive integer
  NoConvergence,        // series exhausted max_terms
  ParameterPole,        // 1F1 with b a non-positive integer
  UnsupportedKind,      // operation not defined for this oscillator
  Domain,               // argument outside the operation's domain
  QuadratureFailure,    // adaptive quadrature did not reach tolerance
  SeedZero,             // transformation function vanishes
  WronskianZero,        // real-case Wronskian vanishes
  WZero,                // confluent/complex w vanishes
  Classification,       // excluded factorization energy
  MissingDerivative,    // wave evaluator cannot supply a needed derivative
  InvalidArgument,      // malformed parameters
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace invosc
