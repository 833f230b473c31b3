#include "indet/oracles.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

namespace indet {

namespace {

using CharSet = std::set<Rank>;

CharSet characters(const Letter& letter, std::size_t sigma) {
    CharSet out;
    if (letter.is_dont_care()) {
        for (Rank r = 1; r <= sigma; ++r)
            out.insert(r);
        return out;
    }
    for (const Rank r : letter.ranks())
        out.insert(r);
    return out;
}

bool overlap(const CharSet& a, const CharSet& b) {
    for (const Rank r : a)
        if (b.count(r) != 0)
            return true;
    return false;
}

std::vector<CharSet> all_characters(const IndetString& x) {
    std::vector<CharSet> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.push_back(characters(x[i], x.alphabet().sigma()));
    return out;
}

} // namespace

bool oracle_is_regular(const IndetString& x) {
    const auto sets = all_characters(x);
    const std::size_t n = sets.size();
    std::vector<std::vector<bool>> match(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            match[i][j] = overlap(sets[i], sets[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (match[a][i] && match[i][b] && !match[a][b])
                    return false;
    return true;
}

PalindromeArray oracle_mp(const StarString& xs) {
    const auto sets = all_characters(xs.underlying());
    const std::size_t m = 2 * sets.size() + 1;
    // 1-based positions; odd ones are the separator.
    auto same = [&](std::size_t i, std::size_t j) {
        if (i % 2 == 1 || j % 2 == 1)
            return i % 2 == 1 && j % 2 == 1;
        return overlap(sets[i / 2 - 1], sets[j / 2 - 1]);
    };
    std::vector<std::uint32_t> radii;
    for (std::size_t c = 1; c <= m; ++c) {
        std::uint32_t r = 0;
        for (std::size_t h = 1; h < c && c + h <= m; ++h) {
            if (!same(c - h, c + h))
                break;
            r = static_cast<std::uint32_t>(h);
        }
        radii.push_back(r);
    }
    return PalindromeArray(std::move(radii));
}

RegularWitness oracle_lex_least(const IndetString& x) {
    if (!oracle_is_regular(x))
        throw std::invalid_argument("oracle_lex_least needs a regular string");
    const auto sets = all_characters(x);
    std::vector<CharSet> distinct;
    std::vector<std::size_t> index;
    for (const CharSet& s : sets) {
        auto it = std::find(distinct.begin(), distinct.end(), s);
        if (it == distinct.end()) {
            distinct.push_back(s);
            it = distinct.end() - 1;
        }
        index.push_back(static_cast<std::size_t>(it - distinct.begin()));
    }
    const std::size_t d = distinct.size();
    if (d > 6)
        throw std::invalid_argument("oracle_lex_least supports at most 6 distinct letters");

    std::vector<std::uint32_t> label(d, 1);
    std::vector<std::uint32_t> best;
    while (true) {
        bool consistent = true;
        for (std::size_t a = 0; a < d && consistent; ++a)
            for (std::size_t b = 0; b < d && consistent; ++b)
                consistent = (label[a] == label[b]) == overlap(distinct[a], distinct[b]);
        if (consistent) {
            std::vector<std::uint32_t> y;
            for (const std::size_t i : index)
                y.push_back(label[i]);
            if (best.empty() || y < best)
                best = y;
        }
        std::size_t k = 0;
        while (k < d && label[k] == d)
            label[k++] = 1;
        if (k == d)
            break;
        ++label[k];
    }
    const std::set<std::uint32_t> used(best.begin(), best.end());
    return RegularWitness{best, static_cast<std::uint32_t>(used.size())};
}

} // namespace indet
