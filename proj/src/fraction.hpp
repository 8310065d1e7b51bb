#pragma once

// Shared reduction step for fractions whose numerator is a vector of integer
// polynomials over one integer polynomial denominator.

#include "qeuler/zpoly.hpp"

#include <span>

namespace qeuler::detail {

/// Brings (nums, den) to canonical form: no nonconstant polynomial divides
/// den and every entry of nums, the integer content of all entries together
/// is 1, and lc(den) > 0. The zero fraction becomes (0, ..., 0) / 1.
///
/// When `bound` is given it must be a multiple (in Q[q]) of every common
/// factor of den and nums; the polynomial gcd search starts from it.
void canonicalize(std::span<ZPoly> nums, ZPoly& den, const ZPoly* bound = nullptr);

/// Strips the integer content and fixes the sign only.
void normalize_content(std::span<ZPoly> nums, ZPoly& den);

/// Substitutes q -> 1/q in every entry and clears the resulting powers of q.
void substitute_q_inverse(std::span<ZPoly> nums, ZPoly& den);

}  // namespace qeuler::detail
