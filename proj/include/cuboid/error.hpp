#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuboid {

enum class Errc {
  ZeroParameter,
  NonPositiveParameter,
  EqualParameters,
  ZeroDivisor,
  ZeroPolynomial,
  ConstantPolynomial,
  DegreeMismatch,
  NotMonic,
  ZeroConstantTerm,
  BadPrime,
  NotSquarefreeModP,
  NotSquarefree,
  NotPrimitive,
  NotEulerBrick,
  InvalidArgument,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cuboid
