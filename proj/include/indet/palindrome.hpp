#pragma once

// Maximal palindrome arrays and their reverse engineering.
//
// Every position in this header is 1-based over x* = # x1 # x2 # ... # xn #
// (length m = 2n+1): odd positions hold the separator #, position 2i holds
// the letter x_i, and the virtual positions 0 and m+1 match nothing.

#include "indet/alphabet.hpp"
#include "indet/errors.hpp"
#include "indet/indet_string.hpp"
#include "indet/letter.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indet {

class StarString {
public:
    explicit StarString(IndetString x) : x_(std::move(x)) {}

    std::size_t size() const noexcept { return 2 * x_.size() + 1; }
    /// Number of letters n.
    std::size_t length() const noexcept { return x_.size(); }
    const Alphabet& alphabet() const noexcept { return x_.alphabet(); }
    const IndetString& underlying() const noexcept { return x_; }

    static bool is_separator(std::size_t pos) noexcept { return pos % 2 == 1; }
    /// pos must be even and in 2..m-1.
    const Letter& letter(std::size_t pos) const { return x_[pos / 2 - 1]; }

    /// # matches only #; positions 0 and m+1 match nothing.
    bool positions_match(std::size_t i, std::size_t j) const noexcept {
        if (i == 0 || j == 0 || i > size() || j > size())
            return false;
        if (is_separator(i) || is_separator(j))
            return is_separator(i) && is_separator(j);
        return letters_match(letter(i), letter(j));
    }

    friend bool operator==(const StarString&, const StarString&) = default;

private:
    IndetString x_;
};

StarString expand(const IndetString& x);
IndetString strip(const StarString& xs);

/// Reads #x1#x2#...#xn#; each letter uses the ordinary text syntax. Throws
/// ParseError when separators are missing, doubled, or the string is empty.
StarString parse_star_text(std::string_view text, const Alphabet& alphabet);
std::string to_text(const StarString& xs);

/// MP[1..m]: MP[c] is the radius of the maximal palindrome centred at c.
class PalindromeArray {
public:
    /// Throws std::invalid_argument unless the length is odd.
    explicit PalindromeArray(std::vector<std::uint32_t> radii);

    std::size_t size() const noexcept { return radii_.size(); }
    std::uint32_t radius(std::size_t pos) const { return radii_[pos - 1]; }
    std::span<const std::uint32_t> values() const noexcept { return radii_; }

    friend bool operator==(const PalindromeArray&, const PalindromeArray&) = default;

private:
    std::vector<std::uint32_t> radii_;
};

/// Whitespace-separated non-negative integers, odd count.
PalindromeArray parse_mp_line(std::string_view line);
std::string to_line(const PalindromeArray& mp);

/// Manacher's scan when every letter is regular, centre expansion otherwise.
PalindromeArray mp_array(const StarString& xs);

/// (a): lower bound 1 - j mod 2 and upper bound min(j-1, m-j); (b): MP[j] odd iff j even.
struct FeasibilityViolation {
    char condition = 'a';
    std::size_t index = 0;

    friend bool operator==(const FeasibilityViolation&, const FeasibilityViolation&) = default;
};

std::optional<FeasibilityViolation> first_violation(const PalindromeArray& mp);
inline bool is_feasible(const PalindromeArray& mp) { return !first_violation(mp); }

class InfeasibleArray : public std::invalid_argument {
public:
    explicit InfeasibleArray(FeasibilityViolation v)
        : std::invalid_argument(std::string("infeasible palindrome array: condition (") + v.condition +
                                ") at j=" + std::to_string(v.index)),
          violation_(v) {}

    const FeasibilityViolation& violation() const noexcept { return violation_; }

private:
    FeasibilityViolation violation_;
};

/// Positions c-MP[c]-1 and c+MP[c]+1, whose letters must not match when both lie in 1..m.
struct ForbiddenPair {
    std::size_t centre = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    bool effective = false;

    friend bool operator==(const ForbiddenPair&, const ForbiddenPair&) = default;
};

/// One pair per centre 1..m. Throws InfeasibleArray.
std::vector<ForbiddenPair> forbidden_pairs(const PalindromeArray& mp);

/// For every position, the partner positions of its effective forbidden pairs
/// on one side, ascending.
class ForbiddenSets {
public:
    enum class Side { left, right };

    ForbiddenSets() = default;
    ForbiddenSets(const PalindromeArray& mp, Side side);

    std::span<const std::uint32_t> at(std::size_t pos) const {
        return {items_.data() + offsets_[pos], items_.data() + offsets_[pos + 1]};
    }

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> items_;
};

/// Some string, possibly indeterminate, with the given array: every required
/// match gets its own fresh character. Throws InfeasibleArray.
StarString any_string_from_mp(const PalindromeArray& mp);

/// Manacher's condition for centre c and range k, with r = MP[c],
/// r_l = MP[c-k], r_r = MP[c+k]:
///   (a) if r_l != r-k then r_r = min(r_l, r-k) else r_r >= r_l
///   (b) if r_r != r-k then r_l = min(r_r, r-k) else r_l >= r_r
/// Throws std::out_of_range unless 1 <= k <= MP[c], c-k >= 1 and c+k <= m.
bool manacher_condition(const PalindromeArray& mp, std::size_t centre, std::size_t range);

/// True iff every in-range probe satisfies manacher_condition. O(sum of radii).
bool manacher_consistent(const PalindromeArray& mp);

struct ConstructOptions {
    /// Re-verify every probe at every evaluated centre instead of trusting
    /// the part already covered by the previous palindrome.
    bool strict = false;
};

struct ConstructResult {
    StarString xs;
    std::uint32_t sigma = 0;
    bool regular = false;
    /// FS: left partners of the forbidden pairs ending at each position.
    ForbiddenSets fs;
    /// True when the fast pass was rejected and the strict pass produced xs.
    bool strict_rerun = false;
};

/// Builds a string whose palindrome array is mp. When mp is regular the
/// result is the lex-least scope-1 string on {1, 2, ...}; otherwise it is an
/// indeterminate string and regular is false. Throws InfeasibleArray, or
/// std::invalid_argument for m < 3.
ConstructResult construct(const PalindromeArray& mp, ConstructOptions options = {});

} // namespace indet
