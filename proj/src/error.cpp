#include "hermu/error.hpp"

namespace hermu {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NonIntegralLattice: return "NonIntegralLattice";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::FormalBlockNotSingular: return "FormalBlockNotSingular";
        case ErrorKind::NotDiagonal: return "NotDiagonal";
        case ErrorKind::UnknownCase: return "UnknownCase";
        case ErrorKind::MatchFailed: return "MatchFailed";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::IngredientFailed: return "IngredientFailed";
        case ErrorKind::TraceFailed: return "TraceFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hermu
