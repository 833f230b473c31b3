#pragma once

#include "indet/alphabet.hpp"
#include "indet/letter.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace indet {

/// A non-empty string of letters over a fixed alphabet. Immutable.
class IndetString {
public:
    /// Throws std::invalid_argument for an empty sequence, a rank outside
    /// 1..sigma, or a don't-care whose scope is not sigma.
    IndetString(Alphabet alphabet, std::vector<Letter> letters);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    /// 0-based.
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const IndetString&, const IndetString&) = default;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// Largest letter scope in x.
std::size_t string_scope(const IndetString& x) noexcept;

} // namespace indet
