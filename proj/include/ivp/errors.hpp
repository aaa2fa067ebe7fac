#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ivp {

struct IvpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : IvpError {
  std::string token;
  ParseError(const std::string& msg, std::string tok)
      : IvpError(msg + " (at '" + tok + "')"), token(std::move(tok)) {}
};

struct NonMonicDivisor : IvpError {
  using IvpError::IvpError;
};

struct ModulusMismatch : IvpError {
  using IvpError::IvpError;
};

struct NonMonic : IvpError {
  using IvpError::IvpError;
};

struct ResourceLimit : IvpError {
  using IvpError::IvpError;
};

struct NotInS : IvpError {
  using IvpError::IvpError;
};

// Enumeration/degree budgets. Enumerations that would exceed a budget throw
// ResourceLimit instead of running away.
struct Caps {
  std::uint64_t enumeration = 1'000'000;          // element/residue sweeps
  std::uint64_t matrix_enumeration = 10'000'000;  // full d^(n^2) matrix sweeps
  std::uint64_t degree = 10'000;                  // generated polynomial degree
};

}  // namespace ivp
