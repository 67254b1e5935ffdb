#pragma once

// Library-wide error taxonomy. Every precondition violation throws Error with
// a code; the CLI maps codes to process exit codes (see tools/).

#include <stdexcept>
#include <string>

namespace hankel {

enum class ErrorCode {
    MalformedInput,        // unparsable file / JSON shape errors
    NotSelfAdjoint,        // conjugation symmetry of the data is broken
    NotReal,               // real-kind operation fed complex data
    InvalidExponent,       // Re(alpha) <= 0
    InvalidSymbol,         // pole location/degree constraints violated
    PoleOnBoundary,        // circle pole with |gamma| = 1 (or |q| = 1)
    DegenerateLeading,     // required nonvanishing value (p, Q(-i a), R(g), ...) is zero
    NotSignMatrix,         // block fails the skew-triangular consistency checks
    ShapeViolation,        // matrix does not have the required zero pattern
    SingularSkewDiagonal,  // vanishing skew-diagonal entry where nonzero is required
    SingularBlock,         // inner block of a pair is singular
    DimensionMismatch,     // jet/block sizes disagree
    NonHermitian,          // numeric input fails the Hermitian check
    IllConditioned,        // numeric back end cannot certify the result
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::InvalidExponent: return "InvalidExponent";
        case ErrorCode::InvalidSymbol: return "InvalidSymbol";
        case ErrorCode::PoleOnBoundary: return "PoleOnBoundary";
        case ErrorCode::DegenerateLeading: return "DegenerateLeading";
        case ErrorCode::NotSignMatrix: return "NotSignMatrix";
        case ErrorCode::ShapeViolation: return "ShapeViolation";
        case ErrorCode::SingularSkewDiagonal: return "SingularSkewDiagonal";
        case ErrorCode::SingularBlock: return "SingularBlock";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonHermitian: return "NonHermitian";
        case ErrorCode::IllConditioned: return "IllConditioned";
    }
    return "Unknown";
}

}  // namespace hankel
