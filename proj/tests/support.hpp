#pragma once

// Enumerators and generators shared by the unit and acceptance tests.

#include "indet/indet_string.hpp"
#include "indet/letter.hpp"
#include "indet/palindrome.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace indet::test {

/// Every string of length 1..max_n whose letters are drawn from `menu`.
inline void for_each_string(const Alphabet& alphabet, const std::vector<Letter>& menu, std::size_t max_n,
                            const std::function<void(const IndetString&)>& visit) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::size_t> digit(n, 0);
        while (true) {
            std::vector<Letter> letters;
            letters.reserve(n);
            for (const std::size_t d : digit)
                letters.push_back(menu[d]);
            visit(IndetString(alphabet, std::move(letters)));
            std::size_t k = n;
            while (k > 0 && digit[k - 1] + 1 == menu.size())
                digit[--k] = 0;
            if (k == 0)
                break;
            ++digit[k - 1];
        }
    }
}

/// The nonempty subsets of {1..sigma} as letters.
inline std::vector<Letter> all_subsets(std::size_t sigma) {
    std::vector<Letter> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << sigma); ++mask) {
        std::vector<Rank> ranks;
        for (Rank r = 1; r <= sigma; ++r)
            if (mask & (std::size_t{1} << (r - 1)))
                ranks.push_back(r);
        out.push_back(Letter::of(ranks));
    }
    return out;
}

/// Every array satisfying the bound and parity conditions with m = 2n+1.
inline void for_each_feasible(std::size_t n, const std::function<void(const PalindromeArray&)>& visit) {
    const std::size_t m = 2 * n + 1;
    std::vector<std::uint32_t> radii(m);
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
        if (j > m) {
            visit(PalindromeArray(radii));
            return;
        }
        const std::size_t upper = std::min(j - 1, m - j);
        for (std::size_t r = j % 2 == 0 ? 1 : 0; r <= upper; r += 2) {
            radii[j - 1] = static_cast<std::uint32_t>(r);
            fill(j + 1);
        }
    };
    fill(1);
}

/// Uniform over the feasible arrays' per-entry choices, m = 2n+1.
inline PalindromeArray random_feasible(std::mt19937_64& rng, std::size_t n) {
    const std::size_t m = 2 * n + 1;
    std::vector<std::uint32_t> radii(m);
    for (std::size_t j = 1; j <= m; ++j) {
        const std::size_t upper = std::min(j - 1, m - j);
        const std::size_t first = j % 2 == 0 ? 1 : 0;
        radii[j - 1] = static_cast<std::uint32_t>(first + 2 * (rng() % ((upper - first) / 2 + 1)));
    }
    return PalindromeArray(std::move(radii));
}

inline IndetString plain_string(const std::vector<Rank>& ranks) {
    Rank sigma = 1;
    std::vector<Letter> letters;
    for (const Rank r : ranks) {
        sigma = std::max(sigma, r);
        letters.push_back(Letter::regular(r));
    }
    return IndetString(Alphabet::integers(sigma), std::move(letters));
}

inline std::vector<Rank> plain_ranks(const StarString& xs) {
    std::vector<Rank> out;
    for (const Letter& l : xs.underlying().letters())
        out.push_back(l.is_regular() ? l.ranks()[0] : 0);
    return out;
}

} // namespace indet::test
