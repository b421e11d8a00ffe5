#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermu {

__extension__ typedef __int128 Int128;

enum class ErrorKind {
    InvalidField,
    ContextMismatch,
    Overflow,
    NonIntegralLattice,
    NotPositiveDefinite,
    FormalBlockNotSingular,
    NotDiagonal,
    UnknownCase,
    MatchFailed,
    ArityMismatch,
    SearchExhausted,
    IngredientFailed,
    TraceFailed,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// ParseError with the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "int64 multiplication");
    return r;
}

inline std::int64_t narrow(Int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::Overflow, "value exceeds int64");
    return static_cast<std::int64_t>(v);
}

}  // namespace checked

}  // namespace hermu
