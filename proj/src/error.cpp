#include "cuboid/error.hpp"

namespace cuboid {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::NonPositiveParameter: return "NonPositiveParameter";
    case Errc::EqualParameters: return "EqualParameters";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotMonic: return "NotMonic";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotSquarefreeModP: return "NotSquarefreeModP";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotEulerBrick: return "NotEulerBrick";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace cuboid
