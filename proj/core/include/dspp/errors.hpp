#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dspp {

// Validation failure; carries the name of the offending field.
class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(std::string field, std::string why)
      : std::invalid_argument(field + ": " + why),
        field_(std::move(field)),
        why_(std::move(why)) {}
  const std::string& field() const noexcept { return field_; }
  const std::string& why() const noexcept { return why_; }

 private:
  std::string field_;
  std::string why_;
};

// Argument outside the mathematical domain of an evaluator (e.g. theta < 0).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& why) : std::domain_error(why) {}
};

// Stationary constructions need E[Y] > 0; thrown when the off-time
// distribution carries no off mass at all.
class ZeroMean : public std::domain_error {
 public:
  explicit ZeroMean(const std::string& why) : std::domain_error(why) {}
};

// Stationary constructions need a finite mean off-time.
class InfiniteMean : public std::domain_error {
 public:
  explicit InfiniteMean(const std::string& why) : std::domain_error(why) {}
};

class EmptySample : public std::invalid_argument {
 public:
  explicit EmptySample(const std::string& why) : std::invalid_argument(why) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& why) : std::domain_error(why) {}
};

// The numerical Laplace inverter's two acceleration orders disagreed beyond
// tolerance; the message carries the evaluation point and both values.
class ConvergenceFailure : public std::runtime_error {
 public:
  explicit ConvergenceFailure(const std::string& why) : std::runtime_error(why) {}
};

// Filesystem failure, kept distinct from validation failures (the CLI maps
// the two to different exit codes).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& why) : std::runtime_error(why) {}
};

}  // namespace dspp
