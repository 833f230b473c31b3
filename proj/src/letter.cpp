#include "indet/letter.hpp"

#include <algorithm>
#include <stdexcept>

namespace indet {

Letter Letter::dont_care(std::size_t sigma) {
    Letter l;
    l.kind_ = Kind::dont_care;
    l.scope_ = sigma;
    return l;
}

Letter Letter::regular(Rank rank) {
    if (rank == 0)
        throw std::invalid_argument("character rank must be positive");
    Letter l;
    l.rank_ = rank;
    return l;
}

Letter Letter::of(std::vector<Rank> ranks) {
    if (ranks.empty())
        throw std::invalid_argument("a letter needs at least one character");
    std::sort(ranks.begin(), ranks.end());
    if (ranks.front() == 0)
        throw std::invalid_argument("character rank must be positive");
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
        throw std::invalid_argument("repeated character in letter");
    if (ranks.size() == 1)
        return regular(ranks.front());
    Letter l;
    l.kind_ = Kind::indeterminate;
    l.scope_ = ranks.size();
    l.ranks_ = std::move(ranks);
    return l;
}

bool letters_match(const Letter& a, const Letter& b) noexcept {
    if (a.is_dont_care() || b.is_dont_care())
        return true;
    auto x = a.ranks();
    auto y = b.ranks();
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j])
            return true;
        if (x[i] < y[j])
            ++i;
        else
            ++j;
    }
    return false;
}

std::size_t LetterHash::operator()(const Letter& letter) const noexcept {
    if (letter.is_dont_care())
        return 0x9e3779b97f4a7c15ULL;
    std::size_t h = letter.ranks().size();
    for (Rank r : letter.ranks())
        h ^= std::hash<Rank>{}(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace indet
