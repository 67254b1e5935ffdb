#pragma once

// JSON (de)serialization for every model type.  Scalars travel as exact
// strings ("num/den") or integers; complex values as {"re": ..., "im": ...}.
// Any shape or parse problem surfaces as Error(ErrorCode::MalformedInput).

#include "hankel/inertia.hpp"
#include "hankel/kernel.hpp"
#include "hankel/representations.hpp"
#include "hankel/sign_calculus.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hankel {

using nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);
Complex complex_from_json(const json& j);
json complex_to_json(const Complex& z);

HankelKernel kernel_from_json(const json& j);
json kernel_to_json(const HankelKernel& k);

LineSymbol line_from_json(const json& j);
json line_to_json(const LineSymbol& phi);

CircleSymbol circle_from_json(const json& j);
json circle_to_json(const CircleSymbol& omega);

SequenceRep sequence_from_json(const json& j);
json sequence_to_json(const SequenceRep& kappa);

json inertia_report_to_json(const InertiaReport& report);
json sign_matrix_to_json(const SignMatrix& S);

/// Parses a whole document, mapping parse errors to MalformedInput.
json parse_json_text(const std::string& text);

/// Stable 64-bit digest of a string (FNV-1a), hex-encoded.
std::string content_digest(const std::string& text);

}  // namespace hankel
