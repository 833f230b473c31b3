#pragma once

// Brute-force reference implementations written straight from the
// definitions. They share no code with the fast paths and are meant for
// tests and the CLI's --oracle cross-check.

#include "indet/indet_string.hpp"
#include "indet/palindrome.hpp"
#include "indet/regularity.hpp"

namespace indet {

/// Checks every triple of positions. O(n^3 sigma).
bool oracle_is_regular(const IndetString& x);

/// Outward expansion from every centre of x*. O(n^2 sigma).
PalindromeArray oracle_mp(const StarString& xs);

/// Lex-least scope-1 string isomorphic to x, found by trying every labelling
/// of the distinct letters. Throws std::invalid_argument when x is not
/// regular or has more than 6 distinct letters.
RegularWitness oracle_lex_least(const IndetString& x);

} // namespace indet
