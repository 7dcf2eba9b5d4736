#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfgflow {

enum class ErrorKind {
  NotNormal,
  OutOfGround,
  EmptyGround,
  CoverageViolation,
  SizeCap,
  UnknownAgent,
  DomainMismatch,
  NotAPartition,
  NotConnected,
  NonZeroSum,
  NotUnitary,
  AxiomViolated,
  NoNonzeroWitness,
  NotPowerSet,
  EmptyProfile,
  InfeasibleCoalition,
  MissingWorth,
  ConditionViolated,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported as an Error. `path` locates
/// the offending field when the failure comes from an input document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = {})
      : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorKind kind_;
  std::string path_;
};

}  // namespace cfgflow
