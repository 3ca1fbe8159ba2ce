#pragma once

#include <stdexcept>
#include <string>

namespace crossgeo {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorCode {
    MalformedToken,
    LabelCountError,
    DisconnectedDiagram,
    MultiComponent,
    NotCoprime,
    TooManyCrossings,
    NotAlternating,
    NotReduced,
    Undefined,
    BadParameter,
    EmptyInput,
    MissingInvariant,
    OddProduct,
    FileUnreadable,
    MalformedRecord,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedToken: return "MalformedToken";
        case ErrorCode::LabelCountError: return "LabelCountError";
        case ErrorCode::DisconnectedDiagram: return "DisconnectedDiagram";
        case ErrorCode::MultiComponent: return "MultiComponent";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::TooManyCrossings: return "TooManyCrossings";
        case ErrorCode::NotAlternating: return "NotAlternating";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::MissingInvariant: return "MissingInvariant";
        case ErrorCode::OddProduct: return "OddProduct";
        case ErrorCode::FileUnreadable: return "FileUnreadable";
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_name(code)) + ": " + what);
}

} // namespace crossgeo
