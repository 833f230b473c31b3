#include "indet/indet_string.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indet {

IndetString::IndetString(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (letters_.empty())
        throw std::invalid_argument("a string must have at least one letter");
    for (const Letter& l : letters_) {
        if (l.is_dont_care()) {
            if (l.scope() != alphabet_.sigma())
                throw std::invalid_argument("don't-care scope must equal sigma");
            continue;
        }
        if (l.ranks().back() > alphabet_.sigma())
            throw std::invalid_argument("character rank " + std::to_string(l.ranks().back()) +
                                        " outside the alphabet");
    }
}

std::size_t string_scope(const IndetString& x) noexcept {
    std::size_t s = 0;
    for (const Letter& l : x.letters())
        s = std::max(s, l.scope());
    return s;
}

} // namespace indet
