#include "nilform/errors.hpp"

namespace nilform {

std::string_view name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare:
      return "NonSquare";
    case ErrorCode::EndpointIsRoot:
      return "EndpointIsRoot";
    case ErrorCode::ZeroPolynomial:
      return "ZeroPolynomial";
    case ErrorCode::RootOnCircle:
      return "RootOnCircle";
    case ErrorCode::Singular:
      return "Singular";
    case ErrorCode::DivisionByZero:
      return "DivisionByZero";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::NotIrreducible:
      return "NotIrreducible";
    case ErrorCode::IrreducibilityUnproven:
      return "IrreducibilityUnproven";
    case ErrorCode::AutomorphismFailsMinPoly:
      return "AutomorphismFailsMinPoly";
    case ErrorCode::TableNotAGroup:
      return "TableNotAGroup";
    case ErrorCode::WrongAutomorphismCount:
      return "WrongAutomorphismCount";
    case ErrorCode::EnclosuresOverlap:
      return "EnclosuresOverlap";
    case ErrorCode::NotTotallyReal:
      return "NotTotallyReal";
    case ErrorCode::BadParameters:
      return "BadParameters";
    case ErrorCode::DatumMismatch:
      return "DatumMismatch";
    case ErrorCode::PrecisionUnreachable:
      return "PrecisionUnreachable";
    case ErrorCode::Undecidable:
      return "Undecidable";
    case ErrorCode::NotNilpotent:
      return "NotNilpotent";
    case ErrorCode::FieldMismatch:
      return "FieldMismatch";
    case ErrorCode::JacobiViolation:
      return "JacobiViolation";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::IrrationalStructureConstant:
      return "IrrationalStructureConstant";
    case ErrorCode::CommutationViolation:
      return "CommutationViolation";
    case ErrorCode::IrrationalEntry:
      return "IrrationalEntry";
    case ErrorCode::LabelMismatch:
      return "LabelMismatch";
    case ErrorCode::NotGenerating:
      return "NotGenerating";
    case ErrorCode::ExtensionInconsistent:
      return "ExtensionInconsistent";
    case ErrorCode::NotHomomorphism:
      return "NotHomomorphism";
    case ErrorCode::NonUnitLabel:
      return "NonUnitLabel";
    case ErrorCode::NotAutomorphism:
      return "NotAutomorphism";
    case ErrorCode::NotTwoStep:
      return "NotTwoStep";
    case ErrorCode::BasisNotAdapted:
      return "BasisNotAdapted";
    case ErrorCode::OddDimension:
      return "OddDimension";
    case ErrorCode::DegeneratePfaffian:
      return "DegeneratePfaffian";
    case ErrorCode::BadDiscriminant:
      return "BadDiscriminant";
    case ErrorCode::SolutionMismatch:
      return "SolutionMismatch";
    case ErrorCode::JNotInjective:
      return "JNotInjective";
    case ErrorCode::DoesNotPreserveW:
      return "DoesNotPreserveW";
    case ErrorCode::PisotNotFound:
      return "PisotNotFound";
    case ErrorCode::NotGraded:
      return "NotGraded";
    case ErrorCode::NotPisot:
      return "NotPisot";
    case ErrorCode::ConstraintFailed:
      return "ConstraintFailed";
    case ErrorCode::LabelCollision:
      return "LabelCollision";
    case ErrorCode::VerificationFailed:
      return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace nilform
