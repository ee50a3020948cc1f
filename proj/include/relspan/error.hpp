#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relspan {

enum class Errc {
  ShapeMismatch,
  FieldMismatch,
  DivisionByZero,
  NotAPrime,
  CompositionMismatch,
  CodomainMismatch,
  SquareDoesNotCommute,
  SquaresDoNotCommute,
  SpanNotInClass,
  LegsNotInClass,
  BaseNotInClass,
  InternalSolveFailure,
  NotASection,
  NotADistLaw,
  NotInverse,
  CompatibilityFails,
  WrongShape,
  MissingPullback,
  NotMonoidMorphisms,
  BaseMismatch,
  NotACategory,
  DoesNotEqualize,
  ParseError,
  UnknownKind,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace relspan
