#include "indet/palindrome.hpp"

#include "indet/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>

namespace indet {

StarString expand(const IndetString& x) { return StarString(x); }

IndetString strip(const StarString& xs) { return xs.underlying(); }

StarString parse_star_text(std::string_view text, const Alphabet& alphabet) {
    if (text.empty())
        throw ParseError("empty input", 0);
    if (text.front() != '#')
        throw ParseError("expected '#'", 0);
    if (text.size() == 1)
        throw ParseError("no letters between separators", 1);
    if (text.back() != '#')
        throw ParseError("expected closing '#'", text.size());

    std::vector<Letter> letters;
    std::size_t start = 1;
    while (start < text.size()) {
        const std::size_t end = text.find('#', start);
        if (end == start)
            throw ParseError("empty letter between separators", start);
        const std::string_view token = text.substr(start, end - start);
        IndetString parsed = [&] {
            try {
                return parse_text(token, alphabet);
            } catch (const ParseError& e) {
                throw ParseError("invalid letter", start + e.position());
            }
        }();
        if (parsed.size() != 1)
            throw ParseError("more than one letter between separators", start);
        letters.push_back(parsed[0]);
        start = end + 1;
    }
    return StarString(IndetString(alphabet, std::move(letters)));
}

std::string to_text(const StarString& xs) {
    std::string out = "#";
    for (const Letter& letter : xs.underlying().letters()) {
        out += to_text(letter, xs.alphabet());
        out += '#';
    }
    return out;
}

PalindromeArray::PalindromeArray(std::vector<std::uint32_t> radii) : radii_(std::move(radii)) {
    if (radii_.size() % 2 == 0)
        throw std::invalid_argument("palindrome array length must be odd, got " + std::to_string(radii_.size()));
}

PalindromeArray parse_mp_line(std::string_view line) {
    std::vector<std::uint32_t> values;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\n' || line[i] == '\r' || line[i] == ',') {
            ++i;
            continue;
        }
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
        if (ec == std::errc::result_out_of_range)
            throw ParseError("value out of range", i);
        if (ec != std::errc() || used == 0)
            throw ParseError("expected a non-negative integer", i);
        const std::size_t next = i + used;
        if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\n' &&
            line[next] != '\r' && line[next] != ',')
            throw ParseError("expected a non-negative integer", i);
        values.push_back(value);
        i = next;
    }
    if (values.empty())
        throw ParseError("empty input", 0);
    if (values.size() % 2 == 0)
        throw ParseError("palindrome array length must be odd", line.size());
    return PalindromeArray(std::move(values));
}

std::string to_line(const PalindromeArray& mp) {
    std::string out;
    for (const std::uint32_t v : mp.values()) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

namespace {

// Manacher's odd-centre scan over x* with separators as 0 and letters as ranks.
PalindromeArray manacher(const StarString& xs) {
    const std::size_t m = xs.size();
    std::vector<std::uint32_t> t(m);
    for (std::size_t pos = 2; pos < m; pos += 2)
        t[pos - 1] = xs.letter(pos).ranks()[0];

    std::vector<std::uint32_t> radius(m);
    std::ptrdiff_t left = 0;
    std::ptrdiff_t right = -1;
    const auto n = static_cast<std::ptrdiff_t>(m);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::ptrdiff_t k = 1;
        if (i <= right)
            k = std::min<std::ptrdiff_t>(radius[static_cast<std::size_t>(left + right - i)] + 1, right - i + 1);
        while (i - k >= 0 && i + k < n && t[static_cast<std::size_t>(i - k)] == t[static_cast<std::size_t>(i + k)])
            ++k;
        radius[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(k - 1);
        if (i + k - 1 > right) {
            left = i - k + 1;
            right = i + k - 1;
        }
    }
    return PalindromeArray(std::move(radius));
}

PalindromeArray centre_expansion(const StarString& xs) {
    const std::size_t m = xs.size();
    std::vector<std::uint32_t> radius(m);
    for (std::size_t c = 1; c <= m; ++c) {
        std::size_t r = 0;
        while (c > r + 1 && c + r + 1 <= m && xs.positions_match(c - r - 1, c + r + 1))
            ++r;
        radius[c - 1] = static_cast<std::uint32_t>(r);
    }
    return PalindromeArray(std::move(radius));
}

} // namespace

PalindromeArray mp_array(const StarString& xs) {
    const auto letters = xs.underlying().letters();
    const bool plain = std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.is_regular(); });
    return plain ? manacher(xs) : centre_expansion(xs);
}

std::optional<FeasibilityViolation> first_violation(const PalindromeArray& mp) {
    const std::size_t m = mp.size();
    for (std::size_t j = 1; j <= m; ++j) {
        const std::uint64_t r = mp.radius(j);
        const std::uint64_t lower = 1 - j % 2;
        const std::uint64_t upper = std::min(j - 1, m - j);
        if ((r % 2 == 1) != (j % 2 == 0))
            return FeasibilityViolation{'b', j};
        if (r < lower || r > upper)
            return FeasibilityViolation{'a', j};
    }
    return std::nullopt;
}

namespace {

void require_feasible(const PalindromeArray& mp) {
    if (const auto v = first_violation(mp))
        throw InfeasibleArray(*v);
}

} // namespace

std::vector<ForbiddenPair> forbidden_pairs(const PalindromeArray& mp) {
    require_feasible(mp);
    const std::size_t m = mp.size();
    std::vector<ForbiddenPair> pairs;
    pairs.reserve(m);
    for (std::size_t c = 1; c <= m; ++c) {
        const std::size_t r = mp.radius(c);
        const std::size_t left = c - r - 1;
        const std::size_t right = c + r + 1;
        pairs.push_back({c, left, right, left > 0 && right < m + 1});
    }
    return pairs;
}

ForbiddenSets::ForbiddenSets(const PalindromeArray& mp, Side side) {
    const std::size_t m = mp.size();
    offsets_.assign(m + 3, 0);
    // Pairs are scanned by ascending centre, which keeps each row ascending on both sides.
    auto for_each_pair = [&](auto&& f) {
        for (std::size_t c = 1; c <= m; ++c) {
            const std::size_t r = mp.radius(c);
            if (c <= r + 1 || c + r + 1 > m)
                continue;
            const std::size_t left = c - r - 1;
            const std::size_t right = c + r + 1;
            if (side == Side::left)
                f(right, left);
            else
                f(left, right);
        }
    };
    for_each_pair([&](std::size_t owner, std::size_t) { ++offsets_[owner + 1]; });
    for (std::size_t i = 1; i < offsets_.size(); ++i)
        offsets_[i] += offsets_[i - 1];
    items_.resize(offsets_.back());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for_each_pair([&](std::size_t owner, std::size_t partner) {
        items_[cursor[owner]++] = static_cast<std::uint32_t>(partner);
    });
}

StarString any_string_from_mp(const PalindromeArray& mp) {
    require_feasible(mp);
    const std::size_t m = mp.size();
    if (m < 3)
        throw std::invalid_argument("palindrome array must describe at least one letter");
    std::vector<std::vector<Rank>> sets(m + 1);
    Rank sigma = 0;
    for (std::size_t c = 1; c <= m; ++c) {
        const std::size_t r = mp.radius(c);
        for (std::size_t k = (c + 1) % 2 == 0 ? 1 : 2; k <= r; k += 2) {
            // c + k is even here, so both ends are letters.
            ++sigma;
            sets[c - k].push_back(sigma);
            sets[c + k].push_back(sigma);
        }
    }
    std::vector<Letter> letters;
    letters.reserve(m / 2);
    for (std::size_t pos = 2; pos < m; pos += 2) {
        if (sets[pos].empty())
            sets[pos].push_back(++sigma);
        letters.push_back(Letter::of(std::move(sets[pos])));
    }
    return StarString(IndetString(Alphabet::integers(sigma), std::move(letters)));
}

bool manacher_condition(const PalindromeArray& mp, std::size_t centre, std::size_t range) {
    const std::size_t m = mp.size();
    if (centre < 1 || centre > m)
        throw std::out_of_range("centre outside 1..m");
    const std::size_t r = mp.radius(centre);
    if (range < 1 || range > r || range >= centre || centre + range > m)
        throw std::out_of_range("range outside 1..MP[c] or beyond the array");
    const std::size_t rl = mp.radius(centre - range);
    const std::size_t rr = mp.radius(centre + range);
    const std::size_t inner = r - range;
    const bool a = rl != inner ? rr == std::min(rl, inner) : rr >= rl;
    const bool b = rr != inner ? rl == std::min(rr, inner) : rl >= rr;
    return a && b;
}

bool manacher_consistent(const PalindromeArray& mp) {
    const std::size_t m = mp.size();
    for (std::size_t c = 1; c <= m; ++c) {
        const std::size_t r = mp.radius(c);
        for (std::size_t k = 1; k <= r && k < c && c + k <= m; ++k)
            if (!manacher_condition(mp, c, k))
                return false;
    }
    return true;
}

} // namespace indet
