#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptl {

enum class Errc {
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  ParseError,
  RelationNotAPath,
  NotAdmissible,
  ArrowInIdeal,
  InvalidQuiver,
  AlgebraMismatch,
  InvalidRepresentation,
  NotSubmodule,
  NotStringAlgebra,
  BandPresent,
  DimBoundReached,
  SearchBudgetExceeded,
  EndTooLarge,
  EndResidueTooLarge,
  IsoUndecided,
  ClosureNotIdempotent,
  SubmoduleEnumerationTooLarge,
  NotGenClosed,
  NotCogenClosed,
  HypothesisNotMet,
  PreorderNotAntisymmetric,
  InvalidPoset,
  InvariantBreach,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ptl
