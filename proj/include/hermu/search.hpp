#pragma once

// Substitution identities between quadratic forms and the column-pruned
// searches that recover them.

#include <optional>

#include "hermu/qform.hpp"

namespace hermu {

/// x -> T x, T of shape (target arity) x (source arity).
using Substitution = IntMatrix;

/// Q(T x) == lambda * Q(x) as polynomials (coefficient comparison).
bool substitution_check(const QuadForm& q, const Substitution& t, Int lambda);

/// Q(T x) == R(x) as polynomials.
bool subform_check(const QuadForm& q, const Substitution& t, const QuadForm& r);

/// Coefficient bounds tried in order by the *_auto helpers.
inline constexpr Int kDefaultSearchBound = 4;
inline constexpr Int kFallbackSearchBound = 8;

/// Exhaustive search for T with entries in [-bound, bound] and Q(T x) = R(x).
/// Columns are filled left to right; column j ranges over the vectors of Q
/// with value R_jj and must meet the bilinear constraints against earlier
/// columns. The first hit in lexicographic candidate order is returned.
/// Throws SearchExhausted when nothing exists within the bound.
Substitution subform_search(const QuadForm& q, const QuadForm& r, Int bound);

/// subform_search(q, lambda * q, bound).
Substitution scaling_substitution_search(const QuadForm& q, Int lambda, Int bound);

/// Bound 4, then 8, before giving up.
Substitution subform_search_auto(const QuadForm& q, const QuadForm& r);
Substitution scaling_substitution_search_auto(const QuadForm& q, Int lambda);

/// Signed permutation P with Q(P x) = R(x), if one exists (same arity).
std::optional<Substitution> signed_permutation_match(const QuadForm& q, const QuadForm& r);

}  // namespace hermu
