#include "indet/palindrome.hpp"

#include <algorithm>
#include <unordered_set>

namespace indet {

namespace {

using Set = std::vector<Rank>;

struct Pass {
    std::vector<Set> sets;
    // The character a position received while the array still looked regular, or 0.
    std::vector<Rank> base;
    // Pairs l < t that were given a shared fresh character, keyed l * (m + 1) + t.
    std::unordered_set<std::uint64_t> linked;
    Rank sigma = 1;
    bool regular = true;
};

Pass run_pass(const PalindromeArray& mp, const ForbiddenSets& left, const ForbiddenSets& right, bool strict) {
    const std::size_t m = mp.size();
    Pass p;
    p.sets.assign(m + 1, {});
    p.sets[2] = {1};
    p.base.assign(m + 1, 0);
    p.base[2] = 1;
    std::vector<char> used(m / 2 + 3, 0);

    auto is_single = [&](std::size_t pos, Rank ch) { return p.sets[pos].size() == 1 && p.sets[pos][0] == ch; };
    auto conflicts = [&](std::size_t pos, Rank ch) {
        for (const std::uint32_t q : left.at(pos))
            if (is_single(q, ch))
                return true;
        for (const std::uint32_t q : right.at(pos))
            if (is_single(q, ch))
                return true;
        return false;
    };

    std::size_t c = 3;
    std::size_t limit = 0;
    while (c <= m - 1) {
        const std::size_t r = mp.radius(c);
        const std::size_t lo = (strict || !p.regular) ? 1 : std::max<std::size_t>(1, limit);

        for (std::size_t k = r; k >= 1; --k) {
            if (p.regular && k < lo)
                break;
            const std::size_t l = c - k;
            const std::size_t t = c + k;
            bool ok = p.regular && manacher_condition(mp, c, k);
            if (ok && t % 2 == 0) {
                if (p.sets[t].empty()) {
                    const Rank ch = p.sets[l][0];
                    if (conflicts(t, ch)) {
                        ok = false;
                    } else {
                        p.sets[t] = {ch};
                        p.base[t] = ch;
                    }
                } else if (p.sets[t] != p.sets[l]) {
                    ok = false;
                }
            }
            if (!ok) {
                p.regular = false;
                // Each pair of positions is probed once, so the two letters can
                // only share a character given to both in the regular phase.
                if (t % 2 == 0 && (p.base[l] == 0 || p.base[l] != p.base[t])) {
                    ++p.sigma;
                    p.sets[l].push_back(p.sigma);
                    p.sets[t].push_back(p.sigma);
                    p.linked.insert(std::uint64_t{l} * (m + 1) + t);
                }
            }
        }

        if (c % 2 == 0 && p.sets[c].empty()) {
            if (p.regular) {
                std::vector<Rank> taken;
                for (const std::uint32_t q : left.at(c))
                    if (!p.sets[q].empty())
                        taken.push_back(p.sets[q][0]);
                for (const std::uint32_t q : right.at(c))
                    if (!p.sets[q].empty())
                        taken.push_back(p.sets[q][0]);
                for (const Rank ch : taken)
                    if (ch < used.size())
                        used[ch] = 1;
                Rank ch = 1;
                while (ch < used.size() && used[ch])
                    ++ch;
                for (const Rank q : taken)
                    if (q < used.size())
                        used[q] = 0;
                p.sets[c] = {ch};
                p.base[c] = ch;
                p.sigma = std::max(p.sigma, ch);
            } else {
                p.sets[c] = {++p.sigma};
            }
        }

        if (p.regular) {
            // Jump to the first centre whose palindrome reaches past this one;
            // the centres passed over lie inside it. Each is looked at once.
            const std::size_t edge = c + r;
            std::size_t q = c + 1;
            while (q <= edge && q + mp.radius(q) <= edge)
                ++q;
            limit = q <= edge ? edge - q : 0;
            c = q;
        } else {
            ++c;
        }
    }
    return p;
}

// Same result as mp_array(output) == mp, in O(sum of radii): two letters
// match iff they share their regular-phase character or were linked.
bool reproduces(const Pass& p, const PalindromeArray& mp) {
    const std::size_t m = mp.size();
    auto same = [&](std::size_t i, std::size_t j) {
        if (i % 2 == 1 || j % 2 == 1)
            return i % 2 == 1 && j % 2 == 1;
        if (p.base[i] != 0 && p.base[i] == p.base[j])
            return true;
        return p.linked.count(std::uint64_t{std::min(i, j)} * (m + 1) + std::max(i, j)) != 0;
    };
    for (std::size_t c = 1; c <= m; ++c) {
        const std::size_t r = mp.radius(c);
        for (std::size_t h = 1; h <= r; ++h)
            if (!same(c - h, c + h))
                return false;
        if (c > r + 1 && c + r + 1 <= m && same(c - r - 1, c + r + 1))
            return false;
    }
    return true;
}

StarString to_star(const std::vector<Set>& sets, Rank sigma) {
    const std::size_t m = sets.size() - 1;
    std::vector<Letter> letters;
    letters.reserve(m / 2);
    for (std::size_t pos = 2; pos < m; pos += 2)
        letters.push_back(Letter::of(sets[pos]));
    return StarString(IndetString(Alphabet::integers(sigma), std::move(letters)));
}

} // namespace

ConstructResult construct(const PalindromeArray& mp, ConstructOptions options) {
    if (const auto v = first_violation(mp))
        throw InfeasibleArray(*v);
    if (mp.size() < 3)
        throw std::invalid_argument("palindrome array must describe at least one letter");

    const ForbiddenSets left(mp, ForbiddenSets::Side::left);
    const ForbiddenSets right(mp, ForbiddenSets::Side::right);

    Pass pass = run_pass(mp, left, right, options.strict);
    bool rerun = false;
    StarString xs = to_star(pass.sets, pass.sigma);
    if (!options.strict) {
        // A regular pass yields plain letters, which Manacher's scan checks in linear time.
        const bool verified = pass.regular ? mp_array(xs) == mp : reproduces(pass, mp);
        if (!verified) {
            pass = run_pass(mp, left, right, true);
            xs = to_star(pass.sets, pass.sigma);
            rerun = true;
        }
    }
    return ConstructResult{std::move(xs), pass.sigma, pass.regular, left, rerun};
}

} // namespace indet
