#include "indet/regularity.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace indet {

ReducedString reduce(const IndetString& x) {
    ReducedString out;
    out.pos_map.reserve(x.size());
    // Dense table for regular letters of small alphabets, hashing for the rest.
    const std::size_t sigma = x.alphabet().sigma();
    constexpr std::uint32_t unseen = UINT32_MAX;
    std::vector<std::uint32_t> regular_index(sigma <= (1u << 20) ? sigma + 1 : 0, unseen);
    std::unordered_map<Letter, std::uint32_t, LetterHash> other_index;

    for (const Letter& l : x.letters()) {
        std::uint32_t* slot = nullptr;
        if (l.is_regular() && l.ranks().front() < regular_index.size()) {
            slot = &regular_index[l.ranks().front()];
        } else {
            slot = &other_index.try_emplace(l, unseen).first->second;
        }
        if (*slot == unseen) {
            *slot = static_cast<std::uint32_t>(out.letters.size());
            out.letters.push_back(l);
        }
        out.pos_map.push_back(*slot);
    }
    return out;
}

namespace {

// One pass of the class-assignment scan, parameterized by the match test.
template <class Matches>
std::optional<RegularWitness> assign_classes(std::size_t m, Matches matches) {
    if (m == 0)
        throw std::invalid_argument("reduced string must be non-empty");
    RegularWitness w;
    w.y.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (w.y[i] == 0) {
            w.y[i] = ++w.sigma_prime;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (matches(j, i)) {
                    if (w.y[j] == 0)
                        w.y[j] = w.sigma_prime;
                    else
                        return std::nullopt;
                }
            }
        } else {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (w.y[j] == w.y[i]) {
                    if (!matches(j, i))
                        return std::nullopt;
                } else if (matches(j, i)) {
                    return std::nullopt;
                }
            }
        }
    }
    return w;
}

} // namespace

std::optional<RegularWitness> regular_min(std::span<const Letter> reduced) {
    return assign_classes(reduced.size(),
                          [&](std::size_t j, std::size_t i) { return letters_match(reduced[j], reduced[i]); });
}

MatchMatrix build_match_matrix(std::span<const Letter> reduced) {
    MatchMatrix out(reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = i + 1; j < reduced.size(); ++j)
            if (letters_match(reduced[i], reduced[j]))
                out.connect(i, j);
    return out;
}

std::optional<RegularWitness> regular_min_matrix(const MatchMatrix& matrix) {
    return assign_classes(matrix.size(), [&](std::size_t j, std::size_t i) { return matrix(i, j); });
}

std::optional<RegularWitness> regular_check(const IndetString& x) {
    ReducedString xr = reduce(x);
    RegularWitness w;
    bool scope_one = true;
    for (const Letter& l : xr.letters)
        scope_one = scope_one && l.is_regular();
    if (scope_one) {
        // Distinct regular letters never match, so classes are the reduced indices.
        w.sigma_prime = static_cast<std::uint32_t>(xr.letters.size());
        w.y.reserve(x.size());
        for (std::uint32_t p : xr.pos_map)
            w.y.push_back(p + 1);
        return w;
    }
    auto yr = regular_min(xr.letters);
    if (!yr)
        return std::nullopt;
    w.sigma_prime = yr->sigma_prime;
    w.y.reserve(x.size());
    for (std::uint32_t p : xr.pos_map)
        w.y.push_back(yr->y[p]);
    return w;
}

std::optional<ScreenRule> quick_screen(const IndetString& x) {
    const std::size_t sigma = x.alphabet().sigma();
    std::unordered_set<Rank> regular_present;
    std::unordered_set<Letter, LetterHash> indeterminate;
    bool dont_care = false;
    for (const Letter& l : x.letters()) {
        switch (l.kind()) {
        case Letter::Kind::dont_care: dont_care = true; break;
        case Letter::Kind::regular: regular_present.insert(l.ranks().front()); break;
        case Letter::Kind::indeterminate: indeterminate.insert(l); break;
        }
    }
    if (regular_present.size() == sigma && !indeterminate.empty())
        return ScreenRule::all_regular_plus_indeterminate;
    if (dont_care && regular_present.size() >= 2)
        return ScreenRule::dont_care_plus_two_regular;
    for (const Letter& l : indeterminate) {
        std::size_t members = 0;
        for (Rank r : l.ranks())
            members += regular_present.count(r);
        if (members >= 2)
            return ScreenRule::indeterminate_plus_two_members;
    }
    return std::nullopt;
}

Partition transitive_closure(const MatchMatrix& matrix) {
    const std::size_t m = matrix.size();
    const std::size_t words = matrix.words_per_row();
    Partition out;
    out.class_of.assign(m, 0);
    // Bit set of vertices not yet placed in a class.
    std::vector<std::uint64_t> open(words, 0);
    for (std::size_t v = 0; v < m; ++v)
        open[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> stack;

    for (std::size_t s = 0; s < m; ++s) {
        if (out.class_of[s] != 0)
            continue;
        const std::uint32_t id = ++out.classes;
        out.class_of[s] = id;
        open[s / 64] &= ~(std::uint64_t{1} << (s % 64));
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            const std::uint64_t* row = matrix.row_words(u);
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t fresh = row[w] & open[w];
                open[w] &= ~fresh;
                while (fresh) {
                    std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
                    fresh &= fresh - 1;
                    out.class_of[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return out;
}

} // namespace indet
