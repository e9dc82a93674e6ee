#include "nonosc/errors.hpp"

namespace nonosc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::OrderZero: return "OrderZero";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::NotFuchsianAtPoint: return "NotFuchsianAtPoint";
        case ErrorKind::DegenerateExponents: return "DegenerateExponents";
        case ErrorKind::EqualRealParts: return "EqualRealParts";
        case ErrorKind::NotSimpleExponents: return "NotSimpleExponents";
        case ErrorKind::BoundaryZero: return "BoundaryZero";
        case ErrorKind::NonIntegerWinding: return "NonIntegerWinding";
        case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
        case ErrorKind::BetaNotNegative: return "BetaNotNegative";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string describe_parse(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& detail) {
    std::string msg = "parse error at offset " + std::to_string(position) + ": " + detail;
    if (!expected.empty()) {
        msg += " (expected one of:";
        for (const auto& e : expected) msg += " " + e;
        msg += ")";
    }
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail)
    : Error(ErrorKind::Parse, describe_parse(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace nonosc
