#include "relspan/error.hpp"

namespace relspan {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAPrime: return "NotAPrime";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::CodomainMismatch: return "CodomainMismatch";
    case Errc::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case Errc::SquaresDoNotCommute: return "SquaresDoNotCommute";
    case Errc::SpanNotInClass: return "SpanNotInClass";
    case Errc::LegsNotInClass: return "LegsNotInClass";
    case Errc::BaseNotInClass: return "BaseNotInClass";
    case Errc::InternalSolveFailure: return "InternalSolveFailure";
    case Errc::NotASection: return "NotASection";
    case Errc::NotADistLaw: return "NotADistLaw";
    case Errc::NotInverse: return "NotInverse";
    case Errc::CompatibilityFails: return "CompatibilityFails";
    case Errc::WrongShape: return "WrongShape";
    case Errc::MissingPullback: return "MissingPullback";
    case Errc::NotMonoidMorphisms: return "NotMonoidMorphisms";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotACategory: return "NotACategory";
    case Errc::DoesNotEqualize: return "DoesNotEqualize";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

}  // namespace relspan
