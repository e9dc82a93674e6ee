#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonosc {

enum class ErrorKind {
    Parse,
    OrderZero,
    NonConvergence,
    NotFuchsianAtPoint,
    DegenerateExponents,
    EqualRealParts,
    NotSimpleExponents,
    BoundaryZero,
    NonIntegerWinding,
    DuplicateAbscissa,
    BetaNotNegative,
    InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Input text did not match the equation grammar. `position` is a byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

// Two consecutive exponents (sorted by real part) share a real part.
class EqualRealPartsError : public Error {
public:
    EqualRealPartsError(std::size_t first, std::size_t second, const std::string& detail)
        : Error(ErrorKind::EqualRealParts, detail), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

}  // namespace nonosc
