#pragma once

// Regularity under transitive matching: a string is regular when every triple
// x[j1] ~ x[i] ~ x[j2] also has x[j1] ~ x[j2]. A regular string is isomorphic
// to a string of single characters; the functions here return the lex-least
// such string on the alphabet {1, 2, ...}.

#include "indet/indet_string.hpp"
#include "indet/letter.hpp"
#include "indet/match_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace indet {

/// A scope-1 string on {1..sigma_prime} in first-occurrence form:
/// y[i] <= 1 + max(y[0..i-1]).
struct RegularWitness {
    std::vector<std::uint32_t> y;
    std::uint32_t sigma_prime = 0;

    friend bool operator==(const RegularWitness&, const RegularWitness&) = default;
};

/// Distinct letters in order of first occurrence, and the index (0-based) of each position's letter.
struct ReducedString {
    std::vector<Letter> letters;
    std::vector<std::uint32_t> pos_map;
};

/// Single scan; letters are deduplicated by exact normal-form equality.
ReducedString reduce(const IndetString& x);

/// Scans the reduced letters left to right, opening a class at each
/// unassigned letter. Returns nullopt on the first intransitive triple.
/// Throws std::invalid_argument on empty input.
std::optional<RegularWitness> regular_min(std::span<const Letter> reduced);

MatchMatrix build_match_matrix(std::span<const Letter> reduced);

/// Same contract and witness as regular_min, reading matches from the matrix.
std::optional<RegularWitness> regular_min_matrix(const MatchMatrix& matrix);

/// Regularity of x with its lex-least isomorphic scope-1 witness, or nullopt when x is indeterminate.
std::optional<RegularWitness> regular_check(const IndetString& x);

/// Cheap sufficient conditions for indeterminacy.
enum class ScreenRule {
    all_regular_plus_indeterminate = 1, ///< every character as a regular letter, plus an indeterminate letter
    dont_care_plus_two_regular = 2,     ///< a don't-care and two distinct regular letters
    indeterminate_plus_two_members = 3, ///< an indeterminate letter and two of its characters as regular letters
};

/// The first rule that fires, or nullopt. Never claims regularity.
std::optional<ScreenRule> quick_screen(const IndetString& x);

/// Class ids 1..classes in first-occurrence order.
struct Partition {
    std::vector<std::uint32_t> class_of;
    std::uint32_t classes = 0;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Transitive closure of a reflexive symmetric relation, as its equivalence
/// classes (connected components). O(m^2).
Partition transitive_closure(const MatchMatrix& matrix);

} // namespace indet
