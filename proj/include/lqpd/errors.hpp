#ifndef LQPD_ERRORS_HPP
#define LQPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lqpd {

// Argument outside an operation's admissible region (open intervals,
// excluded integers, zero coordinates, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument within pole tolerance of a Gamma-function pole.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// A panel/sweep budget ran out before the requested tolerance was met.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Direct iterated integration is only wired up for n <= 3.
class UnsupportedDimension : public DomainError {
 public:
  explicit UnsupportedDimension(const std::string& what) : DomainError(what) {}
};

}  // namespace lqpd

#endif
