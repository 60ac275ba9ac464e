#pragma once

#include <stdexcept>
#include <string>

namespace gorcone {

enum class Errc {
  GcdNotOne,
  NotStrictlyIncreasingAfterSort,
  NotMinimalGenerators,
  NotSymmetric,
  CompleteIntersection,
  AmbiguousClassification,
  ZeroPolynomial,
  UnsupportedRegime,
  NonMonomialProjection,
  NotCohenMacaulay,
  DimensionMismatch,
  InvalidInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotStrictlyIncreasingAfterSort: return "NotStrictlyIncreasingAfterSort";
    case Errc::NotMinimalGenerators: return "NotMinimalGenerators";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::CompleteIntersection: return "CompleteIntersection";
    case Errc::AmbiguousClassification: return "AmbiguousClassification";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnsupportedRegime: return "UnsupportedRegime";
    case Errc::NonMonomialProjection: return "NonMonomialProjection";
    case Errc::NotCohenMacaulay: return "NotCohenMacaulay";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

// domain error carrying a machine-checkable code alongside the message
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

} // namespace gorcone
