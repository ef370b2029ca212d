#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sc {

enum class Errc {
    InvalidPattern,
    PatternTooSmall,
    CapMismatch,
    NullGraph,
    MalformedG6,
    MalformedJson,
    InvalidArgs,
    InvalidSeed,
    InvalidT,
    BadPair,
    RecognizerInconsistent,
    ParseError,
    NonUniformClause,
    RepeatedVariable,
    LengthMismatch,
    TooManyVariables,
    WidthTooSmall,
    WrongWidth,
    NotSatisfying,
    KindMismatch,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::InvalidPattern: return "InvalidPattern";
    case Errc::PatternTooSmall: return "PatternTooSmall";
    case Errc::CapMismatch: return "CapMismatch";
    case Errc::NullGraph: return "NullGraph";
    case Errc::MalformedG6: return "MalformedG6";
    case Errc::MalformedJson: return "MalformedJson";
    case Errc::InvalidArgs: return "InvalidArgs";
    case Errc::InvalidSeed: return "InvalidSeed";
    case Errc::InvalidT: return "InvalidT";
    case Errc::BadPair: return "BadPair";
    case Errc::RecognizerInconsistent: return "RecognizerInconsistent";
    case Errc::ParseError: return "ParseError";
    case Errc::NonUniformClause: return "NonUniformClause";
    case Errc::RepeatedVariable: return "RepeatedVariable";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::WidthTooSmall: return "WidthTooSmall";
    case Errc::WrongWidth: return "WrongWidth";
    case Errc::NotSatisfying: return "NotSatisfying";
    case Errc::KindMismatch: return "KindMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library. `code()` is stable and is what the
/// CLI and the tests dispatch on; `what()` is "<Code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace sc
