#include "loopforge/error.hpp"

namespace loopforge {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NoBuiltinModulus: return "NoBuiltinModulus";
    case Errc::NotTransversal: return "NotTransversal";
    case Errc::DerivedIntersectsH: return "DerivedIntersectsH";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::FamilyDoesNotGenerate: return "FamilyDoesNotGenerate";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::ChainViolated: return "ChainViolated";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::NotProper: return "NotProper";
    case Errc::NotPGroup: return "NotPGroup";
    case Errc::IndexTooSmall: return "IndexTooSmall";
    case Errc::IndexTooLarge: return "IndexTooLarge";
    case Errc::ConditionFails: return "ConditionFails";
    case Errc::NotHall: return "NotHall";
    case Errc::NoInvariantSystem: return "NoInvariantSystem";
    case Errc::InternalTheoremViolation: return "InternalTheoremViolation";
    case Errc::NoIntermediateSubgroup: return "NoIntermediateSubgroup";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace loopforge
