#include "stab2cy/errors.hpp"

namespace stab2cy {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroCharge: return "ZeroCharge";
    case Errc::NotSphericalClass: return "NotSphericalClass";
    case Errc::NotABasis: return "NotABasis";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::InvalidNormalForm: return "InvalidNormalForm";
    case Errc::UnsupportedTwistDistance: return "UnsupportedTwistDistance";
    case Errc::InadmissiblePair: return "InadmissiblePair";
    case Errc::UnsupportedInstance: return "UnsupportedInstance";
    case Errc::ChargeDegenerate: return "ChargeDegenerate";
    case Errc::NotSemistable: return "NotSemistable";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PhasesNotDecreasing: return "PhasesNotDecreasing";
    case Errc::PhaseIncomparable: return "PhaseIncomparable";
    case Errc::InvalidModule: return "InvalidModule";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace stab2cy
