#pragma once

// JSON readers and writers for the command-line front end.
//
//   module:    {"d": [d0, d1], "A1": [[..]], "A2": .., "B1": .., "B2": .., "p": 3}
//   two-term:  {"H0": module, "H1": module, "e": [v0, v1]}   (e optional)
//   normal:    {"v": int, "comps": {"q": [f, g], ...}}
//   word:      ["Tw(0)", "Shift(1)", ...]
//
// Readers throw Errc::InvalidInput on malformed documents and
// Errc::InvalidModule on modules that fail validation.

#include <string>

#include "json.hpp"
#include "stab2cy/bridge.hpp"
#include "stab2cy/heartlab.hpp"
#include "stab2cy/kcharge.hpp"
#include "stab2cy/nfcalc.hpp"
#include "stab2cy/pimod.hpp"
#include "stab2cy/reduction.hpp"
#include "stab2cy/spectral.hpp"
#include "stab2cy/suites.hpp"

namespace stab2cy::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json to_json(const Mat& m);
Mat mat_from_json(const json& j, int rows, int cols, Scalar p);

json to_json(const PiModule& M);
PiModule module_from_json(const json& j);

json to_json(const TwoTermObject& E);
TwoTermObject two_term_from_json(const json& j);

json to_json(const KClass& u);
KClass kclass_from_string(const std::string& text);  // "a,b"
json to_json(const ExactComplex& z);
/// "re,im" with integer or a/b components.
ExactComplex complex_from_string(const std::string& text);
json to_json(const Phase& ph);

json to_json(const HomDims& d);
json to_json(const GradedDims& g);

json to_json(const NormalForm& E);
NormalForm normal_form_from_json(const json& j);
json to_json(const AutoWord& w);
AutoWord word_from_json(const json& j);
json to_json(const ShiftedLine& x);
json to_json(const ReductionTrace& t);
json to_json(const CertificateResult& c);

json to_json(const TwistCohomology& t);
json to_json(const HNFiltration<PiModule>& hn);
json to_json(const JHBlocks<PiModule>& jh);
json to_json(const E3Page& page);
json to_json(const ShiftedModule& X);
json to_json(const Realization& r);
json to_json(const TTReport& r);
json to_json(const SuiteReport& r);

/// Text or, with a leading '@', the contents of a file.
json parse_argument(const std::string& text);

}  // namespace stab2cy::io
