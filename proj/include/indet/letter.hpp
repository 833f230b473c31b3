#pragma once

#include "indet/alphabet.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace indet {

/// A letter: the don't-care, a single character, or a normal-form set of two or more characters.
class Letter {
public:
    enum class Kind : unsigned char { dont_care, regular, indeterminate };

    /// The don't-care over an alphabet of size sigma; its scope is sigma.
    static Letter dont_care(std::size_t sigma);
    static Letter regular(Rank rank);
    /// Any order is accepted and sorted into normal form. One rank gives a
    /// regular letter. Throws std::invalid_argument on an empty list, a zero
    /// rank or a repeated rank.
    static Letter of(std::vector<Rank> ranks);

    Kind kind() const noexcept { return kind_; }
    bool is_dont_care() const noexcept { return kind_ == Kind::dont_care; }
    bool is_regular() const noexcept { return kind_ == Kind::regular; }
    bool is_indeterminate() const noexcept { return kind_ == Kind::indeterminate; }

    /// Character ranks in ascending order; empty for the don't-care.
    std::span<const Rank> ranks() const noexcept {
        if (kind_ == Kind::regular)
            return {&rank_, 1};
        return ranks_;
    }

    std::size_t scope() const noexcept { return scope_; }

    friend bool operator==(const Letter& a, const Letter& b) noexcept {
        if (a.kind_ != b.kind_)
            return false;
        switch (a.kind_) {
        case Kind::dont_care: return true;
        case Kind::regular: return a.rank_ == b.rank_;
        case Kind::indeterminate: return a.ranks_ == b.ranks_;
        }
        return false;
    }

private:
    Letter() = default;

    Kind kind_ = Kind::regular;
    Rank rank_ = 0;
    std::vector<Rank> ranks_;
    std::size_t scope_ = 1;
};

/// True iff the character sets intersect; the don't-care matches everything, itself included.
bool letters_match(const Letter& a, const Letter& b) noexcept;

struct LetterHash {
    std::size_t operator()(const Letter& letter) const noexcept;
};

} // namespace indet
