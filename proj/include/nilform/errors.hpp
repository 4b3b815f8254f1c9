#ifndef NILFORM_ERRORS_HPP
#define NILFORM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilform {

/// Machine-readable failure categories. The CLI prints name(code) in its
/// error JSON, so the spelling of each enumerator is part of the interface.
enum class ErrorCode {
  // exact arithmetic
  NonSquare,
  EndpointIsRoot,
  ZeroPolynomial,
  RootOnCircle,
  Singular,
  DivisionByZero,
  ParseError,
  // number fields
  NotIrreducible,
  IrreducibilityUnproven,
  AutomorphismFailsMinPoly,
  TableNotAGroup,
  WrongAutomorphismCount,
  EnclosuresOverlap,
  NotTotallyReal,
  BadParameters,
  DatumMismatch,
  PrecisionUnreachable,
  Undecidable,
  // Lie algebras
  NotNilpotent,
  FieldMismatch,
  JacobiViolation,
  // rational forms
  DimensionMismatch,
  IrrationalStructureConstant,
  CommutationViolation,
  IrrationalEntry,
  LabelMismatch,
  NotGenerating,
  ExtensionInconsistent,
  NotHomomorphism,
  NonUnitLabel,
  // certification
  NotAutomorphism,
  // Pfaffians and duality
  NotTwoStep,
  BasisNotAdapted,
  OddDimension,
  DegeneratePfaffian,
  BadDiscriminant,
  SolutionMismatch,
  JNotInjective,
  DoesNotPreserveW,
  // recipes
  PisotNotFound,
  NotGraded,
  NotPisot,
  ConstraintFailed,
  LabelCollision,
  VerificationFailed,
};

std::string_view name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nilform

#endif  // NILFORM_ERRORS_HPP
