#pragma once

#include <stdexcept>
#include <string>

namespace stab2cy {

enum class Errc {
  ZeroCharge,
  NotSphericalClass,
  NotABasis,
  DegreeOutOfRange,
  InvalidNormalForm,
  UnsupportedTwistDistance,
  InadmissiblePair,
  UnsupportedInstance,
  ChargeDegenerate,
  NotSemistable,
  HypothesisViolated,
  PhasesNotDecreasing,
  PhaseIncomparable,
  InvalidModule,
  DegreeOverflow,
  TooLarge,
  InvalidInput,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stab2cy
