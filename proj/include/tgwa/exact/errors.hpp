#pragma once

#include <stdexcept>
#include <string>

namespace tgwa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Domain violations: unknown variables, mismatched rings, bad indices.
struct DomainError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace tgwa
