#include "indet/alphabet.hpp"
#include "indet/indet_string.hpp"
#include "indet/letter.hpp"
#include "indet/text_format.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace indet;

namespace {

const Alphabet acgt = Alphabet::from_symbols({"a", "c", "g", "t"});
const Alphabet abcd = Alphabet::from_symbols({"a", "b", "c", "d"});

} // namespace

TEST_CASE("alphabet ranks and budget") {
    CHECK(abcd.sigma() == 4);
    CHECK(abcd.rank_of("c") == 3);
    CHECK_FALSE(abcd.rank_of("z"));
    CHECK(abcd.symbol(2) == "b");
    CHECK(abcd.sigma_star() == 255 - 4);

    const Alphabet dna = Alphabet::dna();
    CHECK(dna.code_width_bits() == 4);
    CHECK(dna.sigma() == 4);
    CHECK(dna.sigma_star() == 11);

    CHECK_THROWS_AS(Alphabet::from_symbols({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_symbols({}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_symbols({"#"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_symbols({"a", "b"}, 2, 2), std::invalid_argument);
    CHECK_NOTHROW(Alphabet::from_symbols({"a", "b"}, 2, 1));

    const Alphabet ints = Alphabet::integers(12);
    CHECK(ints.rank_of("12") == 12);
    CHECK_FALSE(ints.rank_of("13"));
    CHECK_FALSE(ints.rank_of("01"));
    CHECK(ints.symbol(7) == "7");
}

TEST_CASE("letter normal form") {
    const Letter l = Letter::of({3, 1});
    CHECK(l.is_indeterminate());
    CHECK(l.scope() == 2);
    CHECK(std::vector<Rank>(l.ranks().begin(), l.ranks().end()) == std::vector<Rank>{1, 3});
    CHECK(Letter::of({2}) == Letter::regular(2));
    CHECK(Letter::dont_care(4).scope() == 4);
    CHECK_THROWS_AS(Letter::of({}), std::invalid_argument);
    CHECK_THROWS_AS(Letter::of({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Letter::of({2, 2}), std::invalid_argument);
}

TEST_CASE("letters_match") {
    CHECK(letters_match(Letter::of({1, 2}), Letter::of({2, 3})));
    CHECK_FALSE(letters_match(Letter::regular(1), Letter::regular(2)));
    CHECK(letters_match(Letter::dont_care(3), Letter::regular(3)));
    CHECK(letters_match(Letter::dont_care(3), Letter::dont_care(3)));
    CHECK_FALSE(letters_match(Letter::of({1, 3}), Letter::of({2, 4})));
}

TEST_CASE("match is symmetric and reflexive, the don't-care matches everything") {
    auto menu = test::all_subsets(4);
    menu.push_back(Letter::dont_care(4));
    for (const Letter& a : menu) {
        CHECK(letters_match(a, a));
        CHECK(letters_match(Letter::dont_care(4), a));
        for (const Letter& b : menu)
            CHECK(letters_match(a, b) == letters_match(b, a));
    }
}

TEST_CASE("parse_text examples") {
    const IndetString x = parse_text("a{a,c}b{a,d}bb", abcd);
    REQUIRE(x.size() == 6);
    CHECK(x[1].is_indeterminate());
    CHECK(x[3].is_indeterminate());
    CHECK(x[0].is_regular());
    CHECK(string_scope(x) == 2);

    const IndetString y = parse_text("aaa", abcd);
    CHECK(y.size() == 3);
    CHECK(string_scope(y) == 1);

    CHECK(parse_text("a{c,a}b", abcd)[1] == Letter::of({1, 3}));
    CHECK(parse_text("{a}", abcd)[0] == Letter::regular(1));
    CHECK(parse_text("a*b", abcd)[1].is_dont_care());
    CHECK(string_scope(parse_text("{a,c,g}", acgt)) == 3);
    CHECK(string_scope(parse_text("a*", abcd)) == 4);
}

TEST_CASE("parse_text errors carry positions") {
    auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse_text(text, abcd);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("no error for " << text);
        return 0;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("a{}") == 1);
    CHECK(position_of("ab{a,c") == 2);
    CHECK(position_of("az") == 1);
    CHECK(position_of("a}b") == 1);
    CHECK(position_of("{a,{b}}") == 3);
    CHECK(position_of("{a,a}") == 3);
    CHECK(position_of("{a,}") == 3);
    CHECK(position_of("a,b") == 1);
}

TEST_CASE("multi-character symbols use the longest match") {
    const Alphabet ints = Alphabet::integers(12);
    const IndetString x = parse_text("112{2,10}", ints);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == Letter::regular(11));
    CHECK(x[1] == Letter::regular(2));
    CHECK(x[2] == Letter::of({2, 10}));
    CHECK(to_text(x) == "112{2,10}");
}

TEST_CASE("parse, print and parse again is the identity") {
    const auto menu = [] {
        auto m = test::all_subsets(3);
        m.push_back(Letter::dont_care(3));
        return m;
    }();
    const Alphabet abc = Alphabet::from_symbols({"a", "b", "c"});
    test::for_each_string(abc, menu, 3, [&](const IndetString& x) {
        const std::string text = to_text(x);
        const IndetString again = parse_text(text, abc);
        CHECK(again == x);
        CHECK(to_text(again) == text);
    });
}

TEST_CASE("indet string validation") {
    CHECK_THROWS_AS(IndetString(abcd, {}), std::invalid_argument);
    CHECK_THROWS_AS(IndetString(abcd, {Letter::regular(5)}), std::invalid_argument);
    CHECK_THROWS_AS(IndetString(abcd, {Letter::dont_care(3)}), std::invalid_argument);
}

TEST_CASE("alphabet inference") {
    const Alphabet a = infer_alphabet("c{a,b}*c");
    CHECK(a.symbols() == std::vector<std::string>{"a", "b", "c"});
    const Alphabet u = infer_alphabet("βα");
    CHECK(u.symbols() == std::vector<std::string>{"α", "β"});
    CHECK(parse_text("βα", u)[0] == Letter::regular(2));
}
