#include "fuzz.hpp"

#include "indet/oracles.hpp"
#include "indet/palindrome.hpp"
#include "indet/regularity.hpp"
#include "indet/text_format.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>

namespace indet::cli {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [lo, hi]; the modulo bias is irrelevant here and keeps runs identical across standard libraries.
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + engine_() % (hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

PalindromeArray random_feasible(Rng& rng, std::size_t max_m) {
    const std::size_t n = rng.between(1, (max_m - 1) / 2);
    const std::size_t m = 2 * n + 1;
    std::vector<std::uint32_t> radii(m);
    for (std::size_t j = 1; j <= m; ++j) {
        const std::size_t upper = std::min(j - 1, m - j);
        const std::size_t first = j % 2 == 0 ? 1 : 0;
        const std::size_t steps = upper < first ? 0 : (upper - first) / 2;
        radii[j - 1] = static_cast<std::uint32_t>(first + 2 * rng.between(0, steps));
    }
    return PalindromeArray(std::move(radii));
}

IndetString random_plain(Rng& rng, std::size_t max_n) {
    const std::size_t sigma = rng.between(1, 4);
    std::vector<Letter> letters(rng.between(1, max_n), Letter::regular(1));
    for (Letter& l : letters)
        l = Letter::regular(static_cast<Rank>(rng.between(1, sigma)));
    return IndetString(Alphabet::integers(sigma), std::move(letters));
}

IndetString random_indeterminate(Rng& rng, std::size_t max_n) {
    const std::size_t sigma = 4;
    std::vector<Letter> letters;
    const std::size_t n = rng.between(1, max_n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.between(0, 15) == 0) {
            letters.push_back(Letter::dont_care(sigma));
            continue;
        }
        // Bias towards single characters so both verdicts are common.
        std::vector<Rank> ranks;
        if (rng.between(0, 1) == 0) {
            ranks.push_back(static_cast<Rank>(rng.between(1, sigma)));
        } else {
            const std::size_t mask = rng.between(1, 15);
            for (Rank r = 1; r <= sigma; ++r)
                if (mask & (std::size_t{1} << (r - 1)))
                    ranks.push_back(r);
        }
        letters.push_back(Letter::of(std::move(ranks)));
    }
    return IndetString(Alphabet::integers(sigma), std::move(letters));
}

bool round_trip_ok(const PalindromeArray& mp) {
    if (!is_feasible(mp))
        return false;
    if (oracle_mp(any_string_from_mp(mp)) != mp)
        return false;
    const ConstructResult result = construct(mp);
    if (oracle_mp(result.xs) != mp || result.regular != manacher_consistent(mp))
        return false;
    if (result.regular)
        for (const Letter& l : result.xs.underlying().letters())
            if (!l.is_regular())
                return false;
    return true;
}

PalindromeArray shrink_mp(PalindromeArray mp, const std::function<bool(const PalindromeArray&)>& fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        const auto values = mp.values();
        const std::size_t m = values.size();
        if (m > 3) {
            // Drop the last letter and its separator, clamping radii to the new bounds.
            std::vector<std::uint32_t> shorter(values.begin(), values.end() - 2);
            for (std::size_t j = 1; j <= m - 2; ++j) {
                const std::uint32_t upper = static_cast<std::uint32_t>(std::min(j - 1, m - 2 - j));
                std::uint32_t& v = shorter[j - 1];
                if (v > upper)
                    v = (upper % 2 == v % 2) ? upper : upper - 1;
            }
            PalindromeArray candidate(std::move(shorter));
            if (is_feasible(candidate) && fails(candidate)) {
                mp = std::move(candidate);
                progress = true;
                continue;
            }
        }
        for (std::size_t j = 0; j < m && !progress; ++j) {
            if (values[j] < 2)
                continue;
            std::vector<std::uint32_t> lowered(values.begin(), values.end());
            lowered[j] -= 2;
            PalindromeArray candidate(std::move(lowered));
            if (is_feasible(candidate) && fails(candidate)) {
                mp = std::move(candidate);
                progress = true;
            }
        }
    }
    return mp;
}

IndetString shrink_string(IndetString x, const std::function<bool(const IndetString&)>& fails) {
    bool progress = true;
    while (progress && x.size() > 1) {
        progress = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::vector<Letter> letters(x.letters().begin(), x.letters().end());
            letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
            IndetString candidate(x.alphabet(), std::move(letters));
            if (fails(candidate)) {
                x = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return x;
}

double millis(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void timing_curve(std::ostream& out) {
    for (const std::size_t n : {200, 400, 800, 1600}) {
        // a^k b^k has a regular array; a^k {a,b} b^k has an indeterminate one.
        std::vector<Letter> plain;
        std::vector<Letter> mixed;
        for (std::size_t i = 0; i < n; ++i) {
            const Letter l = Letter::regular(i < n / 2 ? 1 : 2);
            plain.push_back(l);
            mixed.push_back(i == n / 2 ? Letter::of({1, 2}) : l);
        }
        const PalindromeArray regular_mp = mp_array(expand(IndetString(Alphabet::integers(2), plain)));
        const PalindromeArray irregular_mp = mp_array(expand(IndetString(Alphabet::integers(2), mixed)));
        const double regular_ms = millis([&] { construct(regular_mp); });
        const double irregular_ms = millis([&] { construct(irregular_mp); });
        out << "timing construct n=" << n << " regular_ms=" << regular_ms << " irregular_ms=" << irregular_ms
            << '\n';
    }
}

} // namespace

int run_fuzz(const FuzzOptions& options, std::ostream& out) {
    Rng rng(options.seed);
    const std::size_t max_m = std::max<std::size_t>(options.max_m, 3);
    const std::size_t max_n = std::max<std::size_t>(options.max_n, 1);
    int status = 0;

    std::size_t passed = 0;
    for (std::size_t t = 0; t < options.count; ++t) {
        // Alternate arbitrary feasible arrays with arrays of plain strings, which are regular.
        const PalindromeArray mp = t % 2 == 0 ? random_feasible(rng, max_m)
                                              : mp_array(expand(random_plain(rng, (max_m - 1) / 2)));
        if (round_trip_ok(mp)) {
            ++passed;
            continue;
        }
        const PalindromeArray small = shrink_mp(mp, [](const PalindromeArray& c) { return !round_trip_ok(c); });
        out << "FAIL round-trip: " << to_line(small) << '\n';
    }
    out << passed << '/' << options.count << " round-trip OK\n";
    if (passed != options.count)
        status = 1;

    auto mp_fails = [](const IndetString& x) { return mp_array(expand(x)) != oracle_mp(expand(x)); };
    std::size_t mp_failures = 0;
    for (std::size_t t = 0; t < options.count; ++t) {
        const IndetString x = random_plain(rng, max_n);
        if (mp_fails(x)) {
            ++mp_failures;
            out << "FAIL mp: " << to_text(shrink_string(x, mp_fails)) << '\n';
        }
    }
    if (mp_failures == 0)
        out << "mp_array = oracle_mp on all\n";
    else
        out << "mp_array != oracle_mp on " << mp_failures << '/' << options.count << '\n';

    auto check_fails = [](const IndetString& x) {
        const auto witness = regular_check(x);
        if (witness.has_value() != oracle_is_regular(x))
            return true;
        return witness && reduce(x).letters.size() <= 6 && oracle_lex_least(x) != *witness;
    };
    std::size_t check_failures = 0;
    for (std::size_t t = 0; t < options.count; ++t) {
        const IndetString x = random_indeterminate(rng, max_n);
        if (check_fails(x)) {
            ++check_failures;
            out << "FAIL check: " << to_text(shrink_string(x, check_fails)) << '\n';
        }
    }
    if (check_failures == 0)
        out << "regular_check = oracle_is_regular on all\n";
    else
        out << "regular_check != oracle_is_regular on " << check_failures << '/' << options.count << '\n';

    if (mp_failures + check_failures > 0)
        status = 1;
    if (options.timing)
        timing_curve(out);
    return status;
}

} // namespace indet::cli
